"""Singularity certificates for moduli of rank-2 bundles on P^3.

The engine computes cohomology of pulled-back instanton bundles by SL(2)
character convolution; the ``oracle`` subpackage recomputes the same numbers
by exact linear algebra on the explicit monads.
"""
from .base_tables import GENERIC_ALPHA, SPECIAL_ALPHA, AlphaParams, alpha_validate
from .chars import Character, decompose, irreducible_char, sym_power_V, tensor
from .engine import (
    PullbackParams,
    SingularityCertificate,
    c2_of,
    certify,
    h1_end_pullback,
    h_pullback,
    is_stable,
    weight_counts,
)
from .hilbert import HilbertFunction, ci_hilbert

__version__ = "0.1.0"

__all__ = [
    "GENERIC_ALPHA", "SPECIAL_ALPHA", "AlphaParams", "alpha_validate",
    "Character", "decompose", "irreducible_char", "sym_power_V", "tensor",
    "PullbackParams", "SingularityCertificate", "c2_of", "certify",
    "h1_end_pullback", "h_pullback", "is_stable", "weight_counts",
    "HilbertFunction", "ci_hilbert",
]
