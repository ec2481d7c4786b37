"""Rational functions F_p(T) with the formal derivation d/dT.

Elements are kept canonical: numerator and denominator coprime and the
denominator monic, so equality is plain coefficient equality.
"""

import random as _random

from ..upoly import UPoly, gcd
from .fp import FpElem, PrimeField


class RatFuncT:
    """num/den with num, den in F_p[T]."""

    __slots__ = ('num', 'den', 'field')

    def __init__(self, num, den, field):
        if not den:
            raise ZeroDivisionError('rational function with zero denominator')
        if not num:
            den = UPoly.one(den.field, 'T')
        elif den.degree > 0:
            g = gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        if not den.is_monic():
            inv = den.field.one / den.lc
            num, den = num * inv, den * inv
        self.num, self.den, self.field = num, den, field

    @classmethod
    def _canon(cls, num, den, field):
        # caller guarantees canonical form
        self = object.__new__(cls)
        self.num, self.den, self.field = num, den, field
        return self

    @property
    def p(self):
        return self.field.p

    def _coerce(self, other):
        if isinstance(other, RatFuncT):
            if other.field is not self.field:
                raise TypeError('rational functions over different primes')
            return other
        if isinstance(other, (int, FpElem)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            if self.den.degree == 0:
                return RatFuncT._canon(self.num + o.num, self.den, self.field)
            return RatFuncT(self.num + o.num, self.den, self.field)
        return RatFuncT(self.num * o.den + o.num * self.den, self.den * o.den, self.field)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncT._canon(-self.num, self.den, self.field)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den.degree == 0 and o.den.degree == 0:
            return RatFuncT._canon(self.num * o.num, self.den, self.field)
        return RatFuncT(self.num * o.num, self.den * o.den, self.field)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError('inverse of zero rational function')
        return RatFuncT(self.den, self.num, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** -e
        return RatFuncT._canon(self.num ** e, self.den ** e, self.field)

    def derive(self):
        """Quotient rule (num' den - num den') / den^2, canonicalized."""
        n, d = self.num, self.den
        if d.degree == 0:
            return RatFuncT._canon(n.derivative(), d, self.field)
        return RatFuncT(n.derivative() * d - n * d.derivative(), d * d, self.field)

    def __call__(self, t):
        return self.num(t) / self.den(t)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, RatFuncT) else other
        if o is NotImplemented:
            return o
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f'({self.num})/({self.den})'

    def __repr__(self):
        return f'RatFuncT({str(self)!r}, p={self.p})'


class RationalFunctionField:
    """F_p(T); instances are interned per prime."""

    _instances = {}

    def __new__(cls, p):
        self = cls._instances.get(p)
        if self is None:
            self = super().__new__(cls)
            self.base = PrimeField(p)
            self.p = p
            one = UPoly.one(self.base, 'T')
            self.zero = RatFuncT._canon(UPoly.zero(self.base, 'T'), one, self)
            self.one = RatFuncT._canon(one, one, self)
            self.T = RatFuncT._canon(UPoly.gen(self.base, 'T'), one, self)
            cls._instances[p] = self
        return self

    is_prime_field = False
    characteristic = property(lambda self: self.p)

    def __call__(self, value):
        if isinstance(value, RatFuncT):
            if value.field is not self:
                raise TypeError('rational function over a different prime')
            return value
        if isinstance(value, UPoly):
            return RatFuncT._canon(value, UPoly.one(self.base, 'T'), self)
        if isinstance(value, (int, FpElem)) or hasattr(value, 'denominator'):
            c = self.base(value)
            return RatFuncT._canon(UPoly(
                [c], self.base, 'T'), UPoly.one(self.base, 'T'), self)
        raise TypeError(f'cannot convert {value!r} to F_{self.p}(T)')

    def poly(self, coeffs):
        """Polynomial in T from ascending coefficients."""
        return self(UPoly(coeffs, self.base, 'T'))

    def fraction(self, num, den):
        return RatFuncT(UPoly(num, self.base, 'T'), UPoly(den, self.base, 'T'), self)

    def random(self, rng=_random, max_deg=3, polynomial=False):
        def rpoly(lo):
            deg = rng.randint(lo, max_deg)
            return UPoly([rng.randrange(self.p) for _ in range(deg + 1)], self.base, 'T')
        num = rpoly(0)
        if polynomial:
            return self(num)
        den = rpoly(0)
        while not den:
            den = rpoly(0)
        return RatFuncT(num, den, self)

    def __repr__(self):
        return f'RationalFunctionField({self.p})'

    def __reduce__(self):
        return RationalFunctionField, (self.p,)
