"""Exact computations with projective polynomials and hyperquadratic elements."""

from .fields import (GF, FpElem, PrimeField, RatFuncT, RationalFunctionField,
                     SymbolicField, SymRat, cube_root, is_prime)
from .upoly import NEG_INF, UPoly, ext_resultant, gcd, modpow, powmod, resultant, xgcd

__all__ = [
    'GF', 'FpElem', 'PrimeField', 'RatFuncT', 'RationalFunctionField', 'SymbolicField',
    'SymRat', 'cube_root', 'is_prime',
    'NEG_INF', 'UPoly', 'ext_resultant', 'gcd', 'modpow', 'powmod', 'resultant', 'xgcd',
]

__version__ = '0.1.0'
