"""Exact linear-algebra oracle for the pullback monads."""
from .core import (
    CommonZeroError,
    FSpec,
    fspec_default,
    fspec_from_text,
    fspec_random,
    fspec_validate,
    macaulay_s_p,
    oracle_h0_E,
    oracle_h0_EndE,
    oracle_h0_h1_E,
    oracle_h1_E,
    quotient_dim,
    tensor_square,
)
from .fields import DEFAULT_PRIME, QQ, PrimeField, parse_field
from .monad import MonadMatrices, build_monad, equivariance_check, monad_check
from .parser import PolyParseError, parse_polynomial, parse_polynomials
from .poly import Polynomial, variables

__all__ = [
    "CommonZeroError", "FSpec", "fspec_default", "fspec_from_text", "fspec_random",
    "fspec_validate", "macaulay_s_p", "oracle_h0_E", "oracle_h0_EndE", "oracle_h0_h1_E",
    "oracle_h1_E", "quotient_dim", "tensor_square", "DEFAULT_PRIME", "QQ", "PrimeField",
    "parse_field", "MonadMatrices", "build_monad", "equivariance_check", "monad_check",
    "PolyParseError", "parse_polynomial", "parse_polynomials", "Polynomial", "variables",
]
