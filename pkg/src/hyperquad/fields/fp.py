"""Prime fields GF(p) with immutable elements.

Elements are :class:`FpElem` instances holding a fully reduced residue.
Field objects are cached per modulus, so ``PrimeField(11) is PrimeField(11)``.
"""

import random as _random

_TABLE_MAX = 1 << 12

# deterministic for n < 3.3e24; far beyond anything this package scans
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FpElem:
    """Residue modulo a prime; supports mixed arithmetic with ``int``."""

    __slots__ = ('value', 'field')

    def __init__(self, value, field):
        self.value = value % field.p
        self.field = field

    @property
    def p(self):
        return self.field.p

    def _coerce(self, other):
        if isinstance(other, FpElem):
            if other.field is not self.field:
                raise TypeError(f'cannot mix GF({self.p}) and GF({other.p})')
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.value + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.value - o, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(o - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.value * o, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FpElem(o, self.field).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.inverse() * o

    def __neg__(self):
        return FpElem(-self.value, self.field)

    def __pos__(self):
        return self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** -e
        return FpElem(pow(self.value, e, self.p), self.field)

    def inverse(self):
        if not self.value:
            raise ZeroDivisionError(f'0 has no inverse in GF({self.p})')
        return FpElem(pow(self.value, -1, self.p), self.field)

    def derive(self):
        """Constants have zero derivative."""
        return self.field.zero

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    __index__ = __int__

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f'FpElem({self.value}, p={self.p})'

    def __str__(self):
        return str(self.value)


class PrimeField:
    """The field GF(p).  Construction validates primality; instances are interned."""

    _instances = {}

    def __new__(cls, p):
        self = cls._instances.get(p)
        if self is None:
            if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
                raise ValueError(f'modulus {p!r} is not prime')
            self = super().__new__(cls)
            self.p = p
            # immutable elements of small fields are shared
            self._table = [FpElem(v, self) for v in range(p)] if p <= _TABLE_MAX else None
            self.zero = self.elem(0)
            self.one = self.elem(1)
            cls._instances[p] = self
        return self

    is_prime_field = True

    def elem(self, value):
        """Element for an already reduced residue 0 <= value < p."""
        if self._table is not None:
            return self._table[value]
        return FpElem(value, self)

    characteristic = property(lambda self: self.p)

    def __call__(self, value):
        if isinstance(value, FpElem):
            if value.field is not self:
                raise TypeError(f'element of GF({value.p}) given to GF({self.p})')
            return value
        if isinstance(value, int):
            return self.elem(value % self.p)
        # Fraction-like: numerator/denominator
        try:
            num, den = value.numerator, value.denominator
        except AttributeError:
            raise TypeError(f'cannot convert {value!r} to GF({self.p})') from None
        return FpElem(num, self) / den

    def __iter__(self):
        return (FpElem(i, self) for i in range(self.p))

    def __len__(self):
        return self.p

    def random(self, rng=_random, nonzero=False):
        lo = 1 if nonzero else 0
        return FpElem(rng.randrange(lo, self.p), self)

    def __repr__(self):
        return f'PrimeField({self.p})'

    def __reduce__(self):
        return PrimeField, (self.p,)


GF = PrimeField


def cube_root(x):
    """Unique cube root in GF(p) for p = 6k+5, computed as x^(-(2k+1)).

    >>> cube_root(PrimeField(11)(8))
    FpElem(2, p=11)
    """
    p = x.p
    if p % 6 != 5:
        raise ValueError(f'cube root map needs p = 5 mod 6, got p = {p}')
    if not x:
        return x
    k = (p - 5) // 6
    return x ** ((-(2 * k + 1)) % (p - 1))
