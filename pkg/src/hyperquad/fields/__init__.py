"""Exact coefficient fields: GF(p), F_p(T) and symbolic Q(a, b, ..., ap, bp, ...)."""

from .fp import GF, FpElem, PrimeField, cube_root, is_prime
from .ratfunc import RatFuncT, RationalFunctionField
from .symbolic import MPoly, SymbolicField, SymRat

__all__ = [
    'GF', 'FpElem', 'PrimeField', 'cube_root', 'is_prime',
    'RatFuncT', 'RationalFunctionField',
    'MPoly', 'SymbolicField', 'SymRat',
]
