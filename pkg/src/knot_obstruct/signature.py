"""
Levine-Tristram signature jumps of sums of torus knots.

Angles are ``fractions.Fraction`` values strictly between 0 and 1, standing for
``omega = exp(2 pi i t)``. The jump of T(p, q) at ``x`` is the lattice count

    #{0<i<p, 0<j<q : i/p + j/q = x} - #{0<i<p, 0<j<q : i/p + j/q = 1 + x}

done in integers after clearing denominators. A floating point Seifert form is
kept alongside purely as an independent check.
"""
from __future__ import annotations

import os
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .polycore import KnotSum, TorusKnot, torus_alexander_factored

RationalAngle = Fraction

DEFAULT_TOLERANCE = 1e-9
TOLERANCE_ENV = "KNOT_OBSTRUCT_TOLERANCE"


class NearDegenerate(ArithmeticError):
    """The hermitian form has an eigenvalue too close to zero to classify."""


def as_angle(x, b: int | None = None) -> Fraction:
    """Coerce ``x`` (or ``x/b``) to a reduced Fraction in the open interval (0, 1)."""
    t = Fraction(x, b) if b is not None else Fraction(x)
    if not 0 < t < 1:
        raise ValueError(f"angle {t} is not in (0, 1)")
    return t


def lattice_counts(p: int, q: int, x) -> tuple[int, int]:
    """Return ``(#S_minus(x), #S_plus(x))`` for T(p, q)."""
    x = Fraction(x)
    n = p * q
    lo, hi = x * n, (1 + x) * n
    counts = []
    for target in (lo, hi):
        if target.denominator != 1:
            counts.append(0)
            continue
        target = target.numerator
        c = 0
        for i in range(1, p):
            rest = target - i * q
            if rest > 0 and rest % p == 0 and rest // p < q:
                c += 1
        counts.append(c)
    return counts[0], counts[1]


def litherland_jump(p: int, q: int, x) -> int:
    """
    Jump of the positive torus knot T(p, q) at angle ``x``.

    >>> litherland_jump(2, 3, Fraction(1, 6))
    -1
    """
    minus, plus = lattice_counts(p, q, x)
    return minus - plus


def candidate_angles(p: int, q: int) -> list[Fraction]:
    """k/pq for 0 < k < pq with k divisible by neither p nor q, ascending."""
    n = p * q
    return [Fraction(k, n) for k in range(1, n) if k % p and k % q]


@dataclass(frozen=True)
class JumpSpectrum:
    """Finitely supported jump function; zero entries are dropped, keys sorted."""

    jumps: Mapping[Fraction, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {as_angle(x): int(j) for x, j in sorted(self.jumps.items()) if j}
        object.__setattr__(self, "jumps", clean)

    def __call__(self, x) -> int:
        return self.jumps.get(Fraction(x), 0)

    def __add__(self, other: JumpSpectrum) -> JumpSpectrum:
        c = Counter(self.jumps)
        c.update(other.jumps)
        return JumpSpectrum(c)

    def __neg__(self) -> JumpSpectrum:
        return JumpSpectrum({x: -j for x, j in self.jumps.items()})

    def __len__(self) -> int:
        return len(self.jumps)

    def __bool__(self) -> bool:
        return bool(self.jumps)

    def support(self) -> list[Fraction]:
        return list(self.jumps)

    def items(self):
        return self.jumps.items()

    def restricted(self, lo=0, hi=Fraction(1, 2)) -> JumpSpectrum:
        """Jumps at angles in the closed interval [lo, hi]."""
        return JumpSpectrum({x: j for x, j in self.jumps.items() if lo <= x <= hi})

    def is_antisymmetric(self) -> bool:
        return all(self(1 - x) == -j for x, j in self.jumps.items())


def torus_spectrum(k: TorusKnot) -> JumpSpectrum:
    jumps = {x: litherland_jump(k.p, k.q, x) for x in candidate_angles(k.p, k.q)}
    spec = JumpSpectrum(jumps)
    return spec if k.sign > 0 else -spec


def jump_spectrum(K: KnotSum) -> JumpSpectrum:
    out = JumpSpectrum()
    for k in K:
        out = out + torus_spectrum(k)
    return out


def singular_point_count(K: KnotSum) -> int:
    return len(jump_spectrum(K))


@dataclass(frozen=True)
class StepFunction:
    """
    Piecewise constant function on (0, 1). ``values[i]`` holds on the open
    interval just left of ``breakpoints[i]`` (``values[-1]`` is right of the last
    breakpoint). At a breakpoint the value is the average of the two sides.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[int, ...]

    def __call__(self, t) -> int:
        t = Fraction(t)
        i = bisect_left(self.breakpoints, t)
        if i < len(self.breakpoints) and self.breakpoints[i] == t:
            # one-sided limits differ by an even amount, so the average is integral
            return (self.values[i] + self.values[i + 1]) // 2
        return self.values[i]

    def jump_at(self, i: int) -> int:
        return (self.values[i + 1] - self.values[i]) // 2


def signature_function(K: KnotSum) -> StepFunction:
    spec = jump_spectrum(K)
    points = tuple(spec.support())
    values = [0]
    for x in points:
        values.append(values[-1] + 2 * spec(x))
    return StepFunction(points, tuple(values))


def signature_at(K: KnotSum, t) -> int:
    return signature_function(K)(as_angle(t))


def _a_form(n: int) -> np.ndarray:
    return -np.eye(n, dtype=np.int64) + np.eye(n, k=1, dtype=np.int64)


def seifert_matrix(p: int, q: int) -> np.ndarray:
    """
    Integer Seifert matrix of the positive torus knot T(p, q), of size (p-1)(q-1).

    Built as the join of the forms of x^p and y^q: the Kronecker product of the
    bidiagonal A-type matrices, negated so that positive torus knots have
    negative signature.
    """
    return -np.kron(_a_form(p - 1), _a_form(q - 1))


def hermitian_form(V: np.ndarray, t) -> np.ndarray:
    w = np.exp(2j * np.pi * float(t))
    return (1 - w) * V + (1 - np.conj(w)) * V.T


def default_tolerance() -> float:
    raw = os.environ.get(TOLERANCE_ENV)
    return float(raw) if raw else DEFAULT_TOLERANCE


def numeric_signature(V: np.ndarray, t, tol: float | None = None) -> int:
    """
    Signature of (1 - w) V + (1 - conj w) V^T at w = exp(2 pi i t).

    Raises ``NearDegenerate`` when an eigenvalue is within ``tol`` times the
    spectral norm of zero.
    """
    tol = default_tolerance() if tol is None else tol
    H = hermitian_form(np.asarray(V), t)
    ev = np.linalg.eigvalsh(H)
    scale = max(np.max(np.abs(ev)), 1e-300)
    small = np.abs(ev) < tol * scale
    if small.any():
        raise NearDegenerate(f"form at t={t} has {int(small.sum())} eigenvalue(s) below {tol:g} relative")
    return int(np.sum(ev > 0) - np.sum(ev < 0))


def oracle_jumps(p: int, q: int, tol: float | None = None) -> dict[Fraction, int]:
    """
    Jumps of T(p, q) read off the numeric Seifert form, sampling each candidate
    angle at half the distance to its nearest neighbour (0 and 1 included).
    """
    V = seifert_matrix(p, q)
    angles = candidate_angles(p, q)
    pts = [Fraction(0)] + angles + [Fraction(1)]
    out = {}
    for i, x in enumerate(angles, start=1):
        eps = min(pts[i] - pts[i - 1], pts[i + 1] - pts[i]) / 2
        hi = numeric_signature(V, x + eps, tol)
        lo = numeric_signature(V, x - eps, tol)
        if (hi - lo) % 2:
            raise NearDegenerate(f"odd signature change at {x} for T({p},{q})")
        out[x] = (hi - lo) // 2
    return out


def root_angles(n: int) -> list[Fraction]:
    """Angles a/n in (0, 1) with gcd(a, n) = 1: the arguments of the roots of phi_n."""
    return [Fraction(a, n) for a in range(1, n) if Fraction(a, n).denominator == n]


def alexander_root_angles(k: TorusKnot) -> set[Fraction]:
    out: set[Fraction] = set()
    for n in torus_alexander_factored(k).factors:
        out.update(root_angles(n))
    return out


def spectrum_from_pairs(pairs: Iterable[tuple[int, int, int]]) -> JumpSpectrum:
    """Build a spectrum from ``(num, den, jump)`` triples."""
    return JumpSpectrum({Fraction(a, b): j for a, b, j in pairs})
