"""
Identity and property suites. Each suite returns a list of violation strings;
an empty list means the suite passed.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .obstruction import forced_factor, obstruct, tau
from .polycore import (
    IntPoly,
    KnotSum,
    TorusKnot,
    coprime_pairs,
    cyclotomic,
    divisors,
    leading_terms,
    sum_alexander,
    sum_alexander_factored,
    torus_alexander_factored,
    torus_alexander_quotient,
)
from .signature import (
    alexander_root_angles,
    candidate_angles,
    jump_spectrum,
    lattice_counts,
    litherland_jump,
    oracle_jumps,
    torus_spectrum,
)


def random_sums(count: int, seed: int = 0, q_max: int = 12, max_terms: int = 4,
                mixed: bool = True) -> list[KnotSum]:
    rng = random.Random(seed)
    pairs = coprime_pairs(q_max)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_terms)
        out.append(KnotSum(
            TorusKnot(*rng.choice(pairs), rng.choice((1, -1)) if mixed else 1) for _ in range(n)))
    return out


def cyclotomic_identity(n_max: int = 200) -> list[str]:
    bad = []
    for n in range(1, n_max + 1):
        prod = IntPoly([1])
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        if prod != IntPoly.monomial(n) - 1:
            bad.append(f"product of phi_d over d | {n} is not t^{n} - 1")
    return bad


def quotient_equals_product(q_max: int = 30) -> list[str]:
    bad = []
    for p, q in coprime_pairs(q_max):
        k = TorusKnot(p, q)
        if torus_alexander_quotient(k) != torus_alexander_factored(k).expand():
            bad.append(f"T({p},{q}): quotient and cyclotomic product differ")
    return bad


def palindromic(sums: list[KnotSum]) -> list[str]:
    return [f"{K}: Alexander polynomial is not palindromic"
            for K in sums if not sum_alexander(K).is_palindromic()]


def value_at_one(sums: list[KnotSum]) -> list[str]:
    return [f"{K}: Delta(1) = {sum_alexander(K)(1)}" for K in sums if sum_alexander(K)(1) != 1]


def degree_formula(sums: list[KnotSum]) -> list[str]:
    bad = []
    for K in sums:
        d = sum_alexander(K).degree()
        if d != sum(k.degree for k in K):
            bad.append(f"{K}: degree {d}")
        if K.is_positive() and 2 * tau(K) != d:
            bad.append(f"{K}: 2 tau = {2 * tau(K)} but degree {d}")
    return bad


def leading_two_terms(sums: list[KnotSum]) -> list[str]:
    bad = []
    for K in sums:
        if K.is_positive():
            top = leading_terms(sum_alexander(K), 2)
            if top != [1, -len(K)]:
                bad.append(f"{K}: leading terms {top}")
    return bad


def antisymmetry(sums: list[KnotSum]) -> list[str]:
    return [f"{K}: spectrum not antisymmetric" for K in sums if not jump_spectrum(K).is_antisymmetric()]


def jump_order_bound(sums: list[KnotSum]) -> list[str]:
    """|J| at a primitive n-th root is at most, and congruent mod 2 to, the multiplicity of phi_n."""
    bad = []
    for K in sums:
        mult = sum_alexander_factored(K).factors
        for x, j in jump_spectrum(K).items():
            m = mult.get(x.denominator, 0)
            if abs(j) > m or (abs(j) - m) % 2:
                bad.append(f"{K}: jump {j} at {x} vs multiplicity {m}")
    return bad


def additivity(sums: list[KnotSum]) -> list[str]:
    bad = []
    for K in sums:
        total = None
        for k in K:
            s = torus_spectrum(k)
            total = s if total is None else total + s
            if torus_spectrum(k.mirror()) != -s:
                bad.append(f"{k}: mirror spectrum is not the negation")
        if total != jump_spectrum(K):
            bad.append(f"{K}: spectrum is not the sum of summand spectra")
    return bad


def order_invariance(sums: list[KnotSum], seed: int = 1) -> list[str]:
    rng = random.Random(seed)
    bad = []
    for K in sums:
        summands = list(K)
        rng.shuffle(summands)
        L = KnotSum(summands)
        a, b = obstruct(K), obstruct(L)
        if (a.tau, a.alexander, a.spectrum, a.forced_factor, a.verdict, a.checks) != \
                (b.tau, b.alexander, b.spectrum, b.forced_factor, b.verdict, b.checks):
            bad.append(f"{K} and {L} disagree")
    return bad


def positive_forced_factor(sums: list[KnotSum]) -> list[str]:
    return [f"{K}: forced factor differs from Alexander factorization"
            for K in sums if K.is_positive()
            and forced_factor(jump_spectrum(K)) != sum_alexander_factored(K)]


def support_in_roots(q_max: int = 20) -> list[str]:
    bad = []
    for p, q in coprime_pairs(q_max):
        k = TorusKnot(p, q)
        extra = set(torus_spectrum(k).support()) - alexander_root_angles(k)
        if extra:
            bad.append(f"T({p},{q}): jumps off the roots at {sorted(extra)}")
    return bad


def oracle_equivalence(q_max: int = 8, workers: int = 4) -> list[str]:
    def one(pair):
        p, q = pair
        numeric = oracle_jumps(p, q)
        return [f"T({p},{q}) at {x}: lattice {litherland_jump(p, q, x)}, numeric {numeric[x]}"
                for x in candidate_angles(p, q) if numeric[x] != litherland_jump(p, q, x)]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(one, coprime_pairs(q_max)))
    return [line for r in results for line in r]


def reciprocal_angles(p: int, q: int) -> list[int]:
    """r such that 1/r is a candidate angle of T(p, q)."""
    n = p * q
    return [r for r in divisors(n) if r > 1 and (n // r) % p and (n // r) % q]


def reciprocal_jumps_sweep(q_max: int = 30) -> list[str]:
    bad = []
    for p, q in coprime_pairs(q_max):
        for r in reciprocal_angles(p, q):
            minus, plus = lattice_counts(p, q, Fraction(1, r))
            if minus != 0 or minus - plus > 0:
                bad.append(f"T({p},{q}) at 1/{r}: #S- = {minus}, J = {minus - plus}")
    return bad


@dataclass
class Suite:
    name: str
    run: Callable[[], list[str]]


def default_suites(sample: int = 60, seed: int = 0) -> list[Suite]:
    sums = random_sums(sample, seed)
    positive = random_sums(sample, seed + 1, mixed=False, max_terms=5)
    both = sums + positive
    return [
        Suite("cyclotomic-identity", cyclotomic_identity),
        Suite("quotient-vs-product", quotient_equals_product),
        Suite("palindromic", lambda: palindromic(both)),
        Suite("value-at-one", lambda: value_at_one(both)),
        Suite("degree-formula", lambda: degree_formula(both)),
        Suite("leading-terms", lambda: leading_two_terms(positive)),
        Suite("antisymmetry", lambda: antisymmetry(both)),
        Suite("jump-order-bound", lambda: jump_order_bound(both)),
        Suite("additivity-mirror", lambda: additivity(both)),
        Suite("order-invariance", lambda: order_invariance(both)),
        Suite("positive-forced-factor", lambda: positive_forced_factor(positive)),
        Suite("support-in-roots", support_in_roots),
        Suite("oracle-equivalence", oracle_equivalence),
        Suite("reciprocal-jumps", reciprocal_jumps_sweep),
    ]


def run_suites(suites: list[Suite]) -> dict[str, list[str]]:
    return {s.name: s.run() for s in suites}

