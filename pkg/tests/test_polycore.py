import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knot_obstruct.polycore import (
    NEG_INF,
    CyclotomicFactorization,
    DegreeTooSmall,
    IntPoly,
    InvalidTorusKnot,
    KnotSum,
    NonzeroRemainder,
    TorusKnot,
    add,
    coprime_pairs,
    cyclotomic,
    divide_exact,
    divisors,
    is_lspace_shape,
    leading_terms,
    mul,
    negate,
    power,
    sum_alexander,
    sum_alexander_factored,
    torus_alexander_factored,
    torus_alexander_quotient,
)

t = IntPoly([0, 1])

coeff_lists = st.lists(st.integers(-10**30, 10**30), max_size=8)
polys = coeff_lists.map(IntPoly)
points = st.integers(-7, 7)


def two_bridge(n):
    """Delta of T(2, n) is the alternating sum of t^0..t^(n-1)."""
    return [(-1) ** i for i in range(n)]


class TestArithmetic:
    def test_examples(self):
        assert mul(t - 1, t + 1) == t ** 2 - 1
        assert power(IntPoly([5, 0, 3]), 0) == IntPoly([1])
        assert mul(cyclotomic(10), cyclotomic(20)).degree() == 12

    def test_zero_polynomial(self):
        z = IntPoly([0, 0, 0])
        assert z.coeffs == ()
        assert z.degree() == NEG_INF
        assert (z * (t + 1)).is_zero()

    def test_str(self):
        assert str(IntPoly([1, -1, 1])) == "t^2 - t + 1"
        assert str(IntPoly([0, -2])) == "-2t"
        assert str(IntPoly()) == "0"

    @given(polys, polys, points)
    def test_evaluation_is_a_ring_map(self, a, b, x):
        assert add(a, b)(x) == a(x) + b(x)
        assert mul(a, b)(x) == a(x) * b(x)
        assert negate(a)(x) == -a(x)

    @given(polys, st.integers(0, 5), points)
    def test_power(self, a, k, x):
        assert power(a, k)(x) == a(x) ** k

    @given(polys, polys)
    def test_degree_of_product(self, a, b):
        if not a.is_zero() and not b.is_zero():
            assert mul(a, b).degree() == a.degree() + b.degree()

    @given(polys, st.builds(lambda cs, lead: IntPoly(cs + [lead]),
                            st.lists(st.integers(-50, 50), max_size=4), st.sampled_from((1, -1))))
    def test_division_by_monic_reconstructs(self, a, d):
        q, r = divmod(a, d)
        assert q * d + r == a
        assert r.is_zero() or r.degree() < d.degree()
        assert divide_exact(a * d, d) == a

    def test_big_coefficients_are_exact(self):
        a = (t + 1) ** 200
        assert a[100] == math.comb(200, 100)
        assert divide_exact(a, (t + 1) ** 199) == t + 1


class TestDivideExact:
    def test_simple(self):
        assert divide_exact(t ** 2 - 1, t - 1) == t + 1

    def test_trefoil_quotient(self):
        num = (t ** 6 - 1) * (t - 1)
        den = (t ** 2 - 1) * (t ** 3 - 1)
        q = divide_exact(num, den)
        assert q == t ** 2 - t + 1
        assert q * den == num

    def test_remainder_raises(self):
        with pytest.raises(NonzeroRemainder):
            divide_exact(t ** 2 + 1, t - 1)

    def test_non_integral_quotient_raises(self):
        with pytest.raises(NonzeroRemainder):
            divide_exact(t + 1, 2 * t)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            divide_exact(t, IntPoly())


class TestCyclotomic:
    def test_small(self):
        assert cyclotomic(1) == t - 1
        assert cyclotomic(6) == t ** 2 - t + 1
        assert cyclotomic(18) == t ** 6 - t ** 3 + 1

    def test_degree_is_totient(self):
        for n in range(1, 120):
            phi = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
            assert cyclotomic(n).degree() == phi

    def test_roots(self):
        # phi_n vanishes at the primitive n-th roots of unity
        for n in (5, 12, 18, 30):
            for k in range(1, n):
                z = np.exp(2j * np.pi * k / n)
                assert (abs(cyclotomic(n)(z)) < 1e-9) == (math.gcd(k, n) == 1)

    def test_product_identity(self):
        for n in range(1, 201):
            prod = IntPoly([1])
            for d in divisors(n):
                prod = prod * cyclotomic(d)
            assert prod == IntPoly.monomial(n) - 1

    def test_invalid(self):
        with pytest.raises(ValueError):
            cyclotomic(0)


class TestTorusKnot:
    @pytest.mark.parametrize("p,q", [(1, 3), (5, 3), (4, 6), (3, 3)])
    def test_invalid(self, p, q):
        with pytest.raises(InvalidTorusKnot):
            TorusKnot(p, q)

    def test_bad_sign(self):
        with pytest.raises(InvalidTorusKnot):
            TorusKnot(2, 3, 0)

    def test_empty_sum(self):
        with pytest.raises(ValueError):
            KnotSum([])


class TestTorusAlexander:
    def test_trefoil(self):
        assert torus_alexander_quotient(TorusKnot(2, 3)) == t ** 2 - t + 1
        assert torus_alexander_factored(TorusKnot(2, 3)).factors == {6: 1}

    def test_t45(self):
        assert torus_alexander_factored(TorusKnot(4, 5)).factors == {10: 1, 20: 1}
        assert torus_alexander_quotient(TorusKnot(4, 5)) == cyclotomic(10) * cyclotomic(20)

    def test_t37(self):
        d = torus_alexander_quotient(TorusKnot(3, 7))
        assert d == cyclotomic(21)
        assert d.degree() == 12

    def test_t56(self):
        assert torus_alexander_factored(TorusKnot(5, 6)).factors == {10: 1, 15: 1, 30: 1}

    def test_mirror_has_same_polynomial(self):
        assert torus_alexander_quotient(TorusKnot(3, 5, -1)) == torus_alexander_quotient(TorusKnot(3, 5))

    @pytest.mark.parametrize("p,q", coprime_pairs(30))
    def test_quotient_equals_factored(self, p, q):
        k = TorusKnot(p, q)
        d = torus_alexander_quotient(k)
        assert d == torus_alexander_factored(k).expand()
        assert d.degree() == (p - 1) * (q - 1)

    @pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
    def test_two_bridge_closed_form(self, n):
        assert torus_alexander_quotient(TorusKnot(2, n)).coeffs == tuple(two_bridge(n))


class TestSums:
    def test_double_t45(self):
        K = KnotSum.of((4, 5), (4, 5))
        d = sum_alexander(K)
        assert sum_alexander_factored(K).factors == {10: 2, 20: 2}
        assert d == cyclotomic(10) ** 2 * cyclotomic(20) ** 2
        assert d.degree() == 24
        assert leading_terms(d, 2) == [1, -2]
        assert d.coeffs[0] == 1

    def test_t29_minus_t23(self):
        K = KnotSum.of((2, 9), (2, 3, -1))
        assert sum_alexander_factored(K).factors == {6: 2, 18: 1}
        assert sum_alexander(K) == cyclotomic(18) * cyclotomic(6) ** 2

    def test_three_two_bridge(self):
        K = KnotSum.of((2, 3), (2, 5), (2, 7))
        expected = np.polymul(np.polymul(np.array(two_bridge(3), dtype=object),
                                         np.array(two_bridge(5), dtype=object)),
                              np.array(two_bridge(7), dtype=object))
        d = sum_alexander(K)
        assert list(d.coeffs) == list(expected)
        assert leading_terms(d, 2) == [1, -3]

    def test_multiplicity_counts_summands(self):
        K = KnotSum.of((2, 5), (4, 5), (5, 6, -1))
        # phi_10 divides Delta of T(2,5), T(4,5) and T(5,6)
        assert sum_alexander_factored(K).factors[10] == 3


knot_sums = st.lists(
    st.tuples(st.sampled_from(coprime_pairs(12)), st.sampled_from((1, -1))),
    min_size=1, max_size=4,
).map(lambda xs: KnotSum(TorusKnot(p, q, s) for (p, q), s in xs))

positive_sums = st.lists(st.sampled_from(coprime_pairs(12)), min_size=1, max_size=5).map(
    lambda xs: KnotSum(TorusKnot(p, q) for p, q in xs))


@settings(max_examples=60, deadline=None)
@given(knot_sums)
def test_sum_properties(K):
    d = sum_alexander(K)
    assert d.is_palindromic()
    assert d(1) == 1
    assert d.degree() == sum((k.p - 1) * (k.q - 1) for k in K)
    assert sum_alexander_factored(K).expand() == d


@settings(max_examples=60, deadline=None)
@given(positive_sums)
def test_top_two_terms(K):
    assert leading_terms(sum_alexander(K), 2) == [1, -len(K)]


class TestLeadingTerms:
    def test_trefoil(self):
        assert leading_terms(t ** 2 - t + 1, 2) == [1, -1]

    def test_too_small(self):
        with pytest.raises(DegreeTooSmall):
            leading_terms(IntPoly([1]), 2)


class TestLSpaceShape:
    def test_phi18(self):
        assert is_lspace_shape(cyclotomic(18))

    def test_double_t45(self):
        assert not is_lspace_shape(sum_alexander(KnotSum.of((4, 5), (4, 5))))

    def test_constant(self):
        assert is_lspace_shape(IntPoly([1]))

    def test_alternating_flag(self):
        p = t ** 4 - t ** 3 - t + 1
        assert is_lspace_shape(p)
        assert not is_lspace_shape(p, alternating=True)
        assert is_lspace_shape(cyclotomic(18), alternating=True)


def test_factorization_degree_and_product():
    f = CyclotomicFactorization({10: 2, 20: 2})
    assert f.degree() == 24
    assert (f * CyclotomicFactorization({6: 1})).factors == {6: 1, 10: 2, 20: 2}
    assert f.expand().degree() == f.degree()
    assert str(f) == "phi_10^2 phi_20^2"
