"""Concordance invariants of torus knot sums and the L-space knot obstruction."""
from .obstruction import ObstructionReport, forced_factor, obstruct, tau, verify_main_theorem
from .parser import parse, render
from .polycore import (
    CyclotomicFactorization,
    IntPoly,
    KnotSum,
    TorusKnot,
    cyclotomic,
    sum_alexander,
    sum_alexander_factored,
    torus_alexander_factored,
    torus_alexander_quotient,
)
from .signature import (
    JumpSpectrum,
    jump_spectrum,
    litherland_jump,
    signature_at,
    signature_function,
    singular_point_count,
)

__version__ = "0.1.0"
