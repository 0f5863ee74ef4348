"""
Exact integer polynomials, cyclotomic polynomials, and Alexander polynomials
of torus knots and their connected sums.

A polynomial is stored densely as a tuple of Python ints in ascending degree,
so ``IntPoly((1, -1, 1))`` is ``t^2 - t + 1``. Coefficients are unbounded.
"""
from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

NEG_INF = float("-inf")


class NonzeroRemainder(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class DegreeTooSmall(ValueError):
    pass


class InvalidTorusKnot(ValueError):
    pass


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    end = len(cs)
    while end and cs[end - 1] == 0:
        end -= 1
    return tuple(cs[:end])


@dataclass(frozen=True, init=False)
class IntPoly:
    """
    Dense integer polynomial in one variable ``t``.

    >>> IntPoly([1, -1, 1])
    IntPoly('t^2 - t + 1')
    >>> IntPoly([0, 0]).degree()
    -inf
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls([c])

    def degree(self):
        """Index of the top coefficient; ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        # Horner; works for ints, Fractions, complex, and IntPoly arguments.
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly(a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        result = IntPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, den: IntPoly) -> tuple[IntPoly, IntPoly]:
        """
        Long division over the integers. Raises ``NonzeroRemainder`` as soon as
        a quotient coefficient would be non-integral.
        """
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlen = len(den.coeffs)
        lead = den.coeffs[-1]
        if len(rem) < dlen:
            return IntPoly(), self
        quot = [0] * (len(rem) - dlen + 1)
        for k in range(len(rem) - dlen, -1, -1):
            top = rem[k + dlen - 1]
            if top == 0:
                continue
            c, r = divmod(top, lead)
            if r:
                raise NonzeroRemainder(f"{self} is not divisible by {den} over the integers")
            quot[k] = c
            for j, d in enumerate(den.coeffs):
                rem[k + j] -= c * d
        return IntPoly(quot), IntPoly(rem)

    def __floordiv__(self, den: IntPoly) -> IntPoly:
        return divide_exact(self, den)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly('{self}')"


T = IntPoly([0, 1])
ONE = IntPoly([1])


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    return a + b


def negate(a: IntPoly) -> IntPoly:
    return -a


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    return a * b


def power(a: IntPoly, k: int) -> IntPoly:
    return a ** k


def divide_exact(num: IntPoly, den: IntPoly) -> IntPoly:
    """
    Return ``q`` with ``q * den == num``.

    >>> divide_exact(IntPoly([-1, 0, 1]), IntPoly([-1, 1]))
    IntPoly('t + 1')
    """
    q, r = divmod(num, den)
    if not r.is_zero():
        raise NonzeroRemainder(f"{num} is not divisible by {den}: remainder {r}")
    return q


def leading_terms(a: IntPoly, k: int) -> list[int]:
    """Coefficients of ``t^deg, t^(deg-1), ...``, ``k`` of them."""
    if k < 1:
        raise ValueError("k must be positive")
    if a.is_zero() or a.degree() < k - 1:
        raise DegreeTooSmall(f"degree of {a} is below {k - 1}")
    return list(a.coeffs[::-1][:k])


def is_lspace_shape(a: IntPoly, alternating: bool = False) -> bool:
    """
    True when every nonzero coefficient is +1 or -1. With ``alternating`` the
    nonzero coefficients must also alternate in sign.
    """
    if a.is_zero():
        raise ValueError("zero polynomial")
    nonzero = [c for c in a.coeffs if c]
    if any(abs(c) != 1 for c in nonzero):
        return False
    if alternating:
        return all(x != y for x, y in zip(nonzero, nonzero[1:]))
    return True


def offending_coefficients(a: IntPoly) -> list[tuple[int, int]]:
    """(exponent, coefficient) pairs with coefficient outside {0, 1, -1}, top degree first."""
    return [(i, c) for i, c in reversed(list(enumerate(a.coeffs))) if abs(c) > 1]


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """
    The n-th cyclotomic polynomial, by dividing ``t^n - 1`` by the cyclotomic
    polynomials of the proper divisors of n.

    >>> cyclotomic(18)
    IntPoly('t^6 - t^3 + 1')
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = IntPoly.monomial(n) - 1
    for d in divisors(n)[:-1]:
        poly = divide_exact(poly, cyclotomic(d))
    return poly


@functools.lru_cache(maxsize=None)
def cyclotomic_degree(n: int) -> int:
    return cyclotomic(n).degree()


@dataclass(frozen=True)
class TorusKnot:
    """T(p, q) with ``sign = -1`` meaning the mirror image -T(p, q)."""

    p: int
    q: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidTorusKnot(f"sign must be +1 or -1, got {self.sign}")
        if self.p < 2:
            raise InvalidTorusKnot(f"T({self.p},{self.q}): need p >= 2")
        if self.p >= self.q:
            raise InvalidTorusKnot(f"T({self.p},{self.q}): need p < q")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidTorusKnot(f"T({self.p},{self.q}): p and q must be coprime")

    @property
    def degree(self) -> int:
        """Degree of the Alexander polynomial, (p-1)(q-1)."""
        return (self.p - 1) * (self.q - 1)

    def mirror(self) -> TorusKnot:
        return TorusKnot(self.p, self.q, -self.sign)

    def __str__(self) -> str:
        return ("-" if self.sign < 0 else "") + f"T({self.p},{self.q})"


@dataclass(frozen=True)
class KnotSum:
    summands: tuple[TorusKnot, ...]

    def __init__(self, summands: Iterable[TorusKnot]):
        s = tuple(summands)
        if not s:
            raise ValueError("a knot sum needs at least one summand")
        object.__setattr__(self, "summands", s)

    @classmethod
    def of(cls, *pairs: tuple[int, ...]) -> KnotSum:
        """``KnotSum.of((2, 9), (2, 3, -1))`` is T(2,9) # -T(2,3)."""
        return cls(TorusKnot(*pair) for pair in pairs)

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def is_positive(self) -> bool:
        return all(k.sign > 0 for k in self.summands)

    def canonical(self) -> tuple[tuple[int, int, int], ...]:
        """Order-independent key: sorted (p, q, sign) triples."""
        return tuple(sorted((k.p, k.q, k.sign) for k in self.summands))

    def __str__(self) -> str:
        return " # ".join(str(k) for k in self.summands)


@dataclass(frozen=True)
class CyclotomicFactorization:
    """Product of ``cyclotomic(n) ** exp`` over ``factors``; keys kept sorted."""

    factors: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(n): int(e) for n, e in sorted(self.factors.items()) if e}
        if any(n < 1 or e < 0 for n, e in clean.items()):
            raise ValueError(f"bad factorization {clean}")
        object.__setattr__(self, "factors", clean)

    def expand(self) -> IntPoly:
        out = ONE
        for n, e in self.factors.items():
            out = out * cyclotomic(n) ** e
        return out

    def degree(self) -> int:
        return sum(e * cyclotomic_degree(n) for n, e in self.factors.items())

    def __mul__(self, other: CyclotomicFactorization) -> CyclotomicFactorization:
        c = Counter(self.factors)
        c.update(other.factors)
        return CyclotomicFactorization(c)

    def __bool__(self) -> bool:
        return bool(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " ".join(f"phi_{n}" + (f"^{e}" if e > 1 else "") for n, e in self.factors.items())


def _pair(k) -> tuple[int, int]:
    return (k.p, k.q) if isinstance(k, TorusKnot) else tuple(k)


def torus_alexander_quotient(k: TorusKnot) -> IntPoly:
    """
    (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)). The mirror has the same polynomial.

    >>> torus_alexander_quotient(TorusKnot(2, 3))
    IntPoly('t^2 - t + 1')
    """
    p, q = _pair(k)
    num = (IntPoly.monomial(p * q) - 1) * (T - 1)
    den = (IntPoly.monomial(p) - 1) * (IntPoly.monomial(q) - 1)
    try:
        return divide_exact(num, den)
    except NonzeroRemainder as exc:  # pragma: no cover - impossible for coprime p, q
        raise AssertionError(f"torus knot quotient failed for T({p},{q})") from exc


def torus_alexander_factored(k: TorusKnot) -> CyclotomicFactorization:
    """One factor phi_(a*b) per pair a | p, b | q with a, b > 1."""
    p, q = _pair(k)
    out: Counter[int] = Counter()
    for a in divisors(p)[1:]:
        for b in divisors(q)[1:]:
            out[a * b] += 1
    return CyclotomicFactorization(out)


def sum_alexander_factored(K: KnotSum) -> CyclotomicFactorization:
    out = CyclotomicFactorization()
    for k in K:
        out = out * torus_alexander_factored(k)
    return out


def sum_alexander(K: KnotSum) -> IntPoly:
    out = ONE
    for k in K:
        out = out * torus_alexander_quotient(k)
    return out


def coprime_pairs(q_max: int, p_max: int | None = None) -> list[tuple[int, int]]:
    """All coprime (p, q) with 2 <= p < q <= q_max and p <= p_max."""
    p_max = q_max if p_max is None else p_max
    return [(p, q) for q in range(3, q_max + 1) for p in range(2, min(q, p_max + 1))
            if math.gcd(p, q) == 1]

