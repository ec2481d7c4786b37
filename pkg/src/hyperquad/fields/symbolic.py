"""Symbolic rational functions over Q with a formal derivation.

Every base variable ``v`` comes paired with a derivative symbol ``vp``;
the derivation sends ``v`` to ``vp`` and is extended by the Leibniz and
quotient rules.  Second derivatives are not representable.

Numerators and denominators are expanded multivariate polynomials stored
as ``{exponent tuple: Fraction}`` maps, so zero testing is syntactic.
Fractions are not reduced by a multivariate gcd; only common monomial
factors and scalar content are cancelled.  Equality is decided by
cross-multiplication.
"""

import random as _random
from fractions import Fraction
from numbers import Rational


def _grlex(exps):
    return (sum(exps), exps)


class MPoly:
    """Expanded polynomial over Q in the variables of a :class:`SymbolicField`."""

    __slots__ = ('terms', 'field')

    def __init__(self, terms, field):
        self.terms = {e: c for e, c in terms.items() if c}
        self.field = field

    @classmethod
    def const(cls, c, field):
        return cls({(0,) * field.nvars: Fraction(c)}, field)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.terms == other.terms

    __hash__ = None

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        return self.terms.get((0,) * self.field.nvars, Fraction(0))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(out, self.field)

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return MPoly(out, self.field)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = Fraction(other)
            return MPoly({e: v * c for e, v in self.terms.items()}, self.field)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(out, self.field)

    def __pow__(self, k):
        result = MPoly.const(1, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def leading(self):
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def monomial_gcd(self):
        it = iter(self.terms)
        g = list(next(it))
        for e in it:
            g = [min(x, y) for x, y in zip(g, e)]
        return tuple(g)

    def shift_down(self, mono):
        return MPoly({tuple(x - y for x, y in zip(e, mono)): c
                      for e, c in self.terms.items()}, self.field)

    def divexact(self, other):
        """Quotient if ``other`` divides ``self`` exactly, else ``None``."""
        le, lc = other.leading()
        rem, quo = self, {}
        while rem:
            e, c = rem.leading()
            diff = tuple(x - y for x, y in zip(e, le))
            if min(diff) < 0:
                return None
            q = c / lc
            quo[diff] = q
            rem = rem - MPoly({diff: q}, self.field) * other
        return MPoly(quo, self.field)

    def derive(self):
        nb = self.field.nbase
        out = {}
        for e, c in self.terms.items():
            if any(e[nb:]):
                names = [self.field.variables[nb + i] for i, k in enumerate(e[nb:]) if k]
                raise ValueError(f'second derivative needed for {", ".join(names)}')
            for i in range(nb):
                if e[i]:
                    ne = list(e)
                    ne[i] -= 1
                    ne[nb + i] += 1
                    ne = tuple(ne)
                    out[ne] = out.get(ne, 0) + c * e[i]
        return MPoly(out, self.field)

    def used_variables(self):
        idx = set()
        for e in self.terms:
            idx.update(i for i, k in enumerate(e) if k)
        return idx

    def __str__(self):
        if not self.terms:
            return '0'
        names = self.field.variables
        parts = []
        for e in sorted(self.terms, key=_grlex, reverse=True):
            c = self.terms[e]
            mono = '*'.join(n if k == 1 else f'{n}^{k}' for n, k in zip(names, e) if k)
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = '-' + mono
            else:
                s = f'{c}*{mono}'
            parts.append(s if not parts or s.startswith('-') else '+' + s)
        return ''.join(parts)

    def __repr__(self):
        return f'MPoly({str(self)!r})'


class SymRat:
    """Quotient of two :class:`MPoly` over a :class:`SymbolicField`."""

    __slots__ = ('num', 'den', 'field')

    def __init__(self, num, den, field):
        if not den:
            raise ZeroDivisionError('symbolic fraction with zero denominator')
        if not num:
            den = MPoly.const(1, field)
        elif not den.is_constant():
            g = tuple(min(x, y) for x, y in zip(num.monomial_gcd(), den.monomial_gcd()))
            if any(g):
                num, den = num.shift_down(g), den.shift_down(g)
        lc = den.leading()[1]
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        self.num, self.den, self.field = num, den, field

    def _coerce(self, other):
        if isinstance(other, SymRat):
            if other.field is not self.field:
                raise TypeError('symbolic fractions over different variable sets')
            return other
        if isinstance(other, Rational):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return SymRat(self.num + o.num, self.den, self.field)
        return SymRat(self.num * o.den + o.num * self.den, self.den * o.den, self.field)

    __radd__ = __add__

    def __neg__(self):
        return SymRat(-self.num, self.den, self.field)

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
        return SymRat(self.num * o.num, self.den * o.den, self.field)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError('inverse of zero')
        return SymRat(self.den, self.num, self.field)

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

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** -k
        return SymRat(self.num ** k, self.den ** k, self.field)

    def derive(self):
        """Apply the derivation v -> vp (quotient rule on num/den)."""
        n, d = self.num, self.den
        if d.is_constant():
            return SymRat(n.derive(), d, self.field)
        return SymRat(n.derive() * d - n * d.derive(), d * d, self.field)

    def substitute(self, assignments, auto_derive=True):
        """Simultaneous substitution of variables by expressions.

        ``assignments`` maps variable names to SymRat (or rationals).  With
        ``auto_derive``, replacing a base variable ``v`` by ``E`` also
        replaces ``vp`` by the derivative of ``E`` unless ``vp`` is given.
        """
        F = self.field
        images = {}
        for name, expr in assignments.items():
            images[F.index(name)] = F(expr)
        if auto_derive:
            for i in [i for i in images if i < F.nbase]:
                images.setdefault(F.nbase + i, images[i].derive())
        for i, expr in images.items():
            clash = (expr.num.used_variables() | expr.den.used_variables()) & images.keys()
            if clash:
                names = ', '.join(F.variables[j] for j in sorted(clash))
                raise ValueError(
                    f'image of {F.variables[i]} uses substituted variable(s) {names}')
        nn, nd = _evaluate(self.num, images)
        dn, dd = _evaluate(self.den, images)
        if not dn:
            raise ZeroDivisionError('denominator vanishes identically after substitution')
        return SymRat(nn * dd, nd * dn, F)

    def simplify(self):
        """Return an equal fraction with the denominator divided out when it divides."""
        if self.den.is_constant():
            return self
        q = self.num.divexact(self.den)
        if q is None:
            return self
        return SymRat(q, MPoly.const(1, self.field), self.field)

    def is_polynomial(self):
        return self.simplify().den.is_constant()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = other if isinstance(other, SymRat) else self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return self.num == o.num
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def __str__(self):
        s = self.simplify()
        if s.den.is_constant():
            return str(s.num)
        return f'({s.num})/({s.den})'

    def __repr__(self):
        return f'SymRat({str(self)!r})'


def _evaluate(poly, images):
    # evaluate poly at the images as a pair (numerator, denominator) of MPoly,
    # clearing denominators variable by variable to avoid fraction growth
    F = poly.field
    if not images:
        return poly, MPoly.const(1, F)
    maxdeg = {i: max((e[i] for e in poly.terms), default=0) for i in images}
    one = MPoly.const(1, F)
    num_pows, den_pows = {}, {}

    def power(cache, i, base, k):
        key = (i, k)
        if key not in cache:
            cache[key] = base ** k
        return cache[key]

    total = MPoly({}, F)
    for e, c in poly.terms.items():
        rest = tuple(0 if i in images else k for i, k in enumerate(e))
        term = MPoly({rest: c}, F)
        for i, img in images.items():
            k, D = e[i], maxdeg[i]
            if k:
                term = term * power(num_pows, i, img.num, k)
            if D - k and not img.den.is_constant():
                term = term * power(den_pows, i, img.den, D - k)
            elif D - k:
                term = term * (img.den.constant_value() ** (D - k))
        total = total + term
    den = one
    for i, img in images.items():
        if maxdeg[i]:
            den = den * img.den ** maxdeg[i]
    return total, den


class SymbolicField:
    """Q(v_1, ..., v_n, v_1p, ..., v_np) with derivation v_i -> v_ip."""

    _instances = {}

    def __new__(cls, base=('a', 'b', 'c', 'd')):
        base = tuple(base)
        self = cls._instances.get(base)
        if self is None:
            if len(set(base)) != len(base):
                raise ValueError('duplicate variable names')
            derived = tuple(v + 'p' for v in base)
            if set(derived) & set(base):
                raise ValueError('a base variable collides with a derivative symbol')
            self = super().__new__(cls)
            self.base = base
            self.variables = base + derived
            self.nbase = len(base)
            self.nvars = 2 * len(base)
            self._index = {v: i for i, v in enumerate(self.variables)}
            self.zero = SymRat(MPoly({}, self), MPoly.const(1, self), self)
            self.one = self(1)
            cls._instances[base] = self
        return self

    is_prime_field = False
    characteristic = 0

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f'unknown symbol {name!r}') from None

    def var(self, name):
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return SymRat(MPoly({tuple(e): Fraction(1)}, self), MPoly.const(1, self), self)

    def gens(self):
        return tuple(self.var(v) for v in self.base)

    def __call__(self, value):
        if isinstance(value, SymRat):
            if value.field is not self:
                raise TypeError('symbolic fraction over a different variable set')
            return value
        if isinstance(value, str):
            return self.var(value)
        if isinstance(value, Rational):
            return SymRat(MPoly.const(value, self), MPoly.const(1, self), self)
        raise TypeError(f'cannot convert {value!r} to a symbolic fraction')

    def random(self, rng=_random, terms=3, max_exp=2, coeff_range=5, fraction=False):
        """Random polynomial (or fraction) in the base variables."""
        def rpoly():
            out = {}
            for _ in range(rng.randint(1, terms)):
                e = tuple(rng.randint(0, max_exp) for _ in self.base) + (0,) * self.nbase
                out[e] = out.get(e, 0) + Fraction(rng.randint(-coeff_range, coeff_range))
            return MPoly(out, self)
        num = rpoly()
        den = MPoly.const(1, self)
        if fraction:
            den = rpoly()
            while not den:
                den = rpoly()
        return SymRat(num, den, self)

    def __repr__(self):
        return f'SymbolicField({self.base!r})'

    def __reduce__(self):
        return SymbolicField, (self.base,)
