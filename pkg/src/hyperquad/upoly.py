"""Dense univariate polynomials over an exact coefficient field.

A polynomial c_0 + c_1 x + ... + c_n x^n is stored as the tuple
``(c_0, ..., c_n)`` of field elements with c_n nonzero; the zero
polynomial is the empty tuple and has degree ``NEG_INF``.

Any field object works as long as it provides ``zero``, ``one`` and
``__call__`` for coercing integers, and its elements implement the usual
arithmetic operators plus truth testing (false iff zero).  Over prime
fields the hot loops drop to plain integer lists.
"""

import itertools
import re

NEG_INF = float('-inf')

_ATOM = re.compile(r'[A-Za-z_]\w*|\d+')


def _strip(cs):
    while cs and not cs[-1]:
        cs.pop()
    return cs


class UPoly:
    """Polynomial in one variable with coefficients in ``field``."""

    __slots__ = ('field', 'coeffs', 'var')

    def __init__(self, coeffs, field, var='x'):
        self.field = field
        self.coeffs = tuple(_strip([field(c) for c in coeffs]))
        self.var = var

    @classmethod
    def _make(cls, coeffs, field, var):
        # coeffs are already field elements
        self = object.__new__(cls)
        self.field = field
        self.coeffs = tuple(_strip(list(coeffs)))
        self.var = var
        return self

    def _like(self, coeffs):
        return UPoly._make(coeffs, self.field, self.var)

    def _ints(self):
        return [c.value for c in self.coeffs]

    def _from_ints(self, values):
        elem = self.field.elem
        return self._like([elem(v) for v in values])

    @classmethod
    def zero(cls, field, var='x'):
        return cls._make((), field, var)

    @classmethod
    def one(cls, field, var='x'):
        return cls._make((field.one,), field, var)

    @classmethod
    def gen(cls, field, var='x'):
        return cls._make((field.zero, field.one), field, var)

    @classmethod
    def monomial(cls, c, k, field, var='x'):
        return cls._make((field.zero,) * k + (field(c),), field, var)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    __getitem__ = coeff

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, UPoly):
            if other.field is not self.field and other.field != self.field:
                raise TypeError('polynomials over different fields')
            return other
        try:
            c = self.field(other)
        except TypeError:
            return NotImplemented
        return self._like((c,))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return self._like([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return self._like([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            try:
                c = self.field(other)
            except TypeError:
                return NotImplemented
            return self._like([x * c for x in self.coeffs])
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._like(())
        if self.field.is_prime_field:
            p = self.field.p
            out = [0] * (len(a) + len(b) - 1)
            bi = other._ints()
            for i, x in enumerate(self._ints()):
                if x:
                    for j, y in enumerate(bi):
                        out[i + j] += x * y
            return self._from_ints([v % p for v in out])
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError('negative exponent')
        result = UPoly.one(self.field, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError('polynomial division by zero')
        n, m = len(self.coeffs), len(other.coeffs)
        if n < m:
            return self._like(()), self
        if self.field.is_prime_field:
            p = self.field.p
            r = self._ints()
            d = other._ints()
            inv = pow(d[-1], -1, p)
            q = [0] * (n - m + 1)
            for k in range(n - m, -1, -1):
                c = r[k + m - 1] * inv % p
                q[k] = c
                if c:
                    for j in range(m):
                        r[k + j] = (r[k + j] - c * d[j]) % p
            return self._from_ints(q), self._from_ints(r[:m - 1])
        r = list(self.coeffs)
        d = other.coeffs
        lc = d[-1]
        inv = None if lc == self.field.one else self.field.one / lc
        q = [self.field.zero] * (n - m + 1)
        for k in range(n - m, -1, -1):
            c = r[k + m - 1]
            if inv is not None:
                c = c * inv
            q[k] = c
            if c:
                for j in range(m):
                    r[k + j] = r[k + j] - c * d[j]
        return self._like(q), self._like(r[:m - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        try:
            other = self.field(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == ((other,) if other else ())

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, value):
        """Horner evaluation; ``value`` may be a scalar or another polynomial."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self):
        """Derivative with respect to the main variable."""
        return self._like([c * k for k, c in enumerate(self.coeffs)][1:])

    def map_coeffs(self, fn):
        return UPoly._make([fn(c) for c in self.coeffs], self.field, self.var)

    def monic(self):
        if not self.coeffs or self.is_monic():
            return self
        inv = self.field.one / self.coeffs[-1]
        return self._like([c * inv for c in self.coeffs])

    def __str__(self):
        if not self.coeffs:
            return '0'
        one = self.field.one
        prime = self.field.is_prime_field
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = '' if k == 0 else self.var if k == 1 else f'{self.var}^{k}'
            if c == one and mono:
                terms.append(mono)
                continue
            cs = str(c)
            if not prime and not _ATOM.fullmatch(cs):
                cs = f'({cs})'
            terms.append(f'{cs}*{mono}' if mono else cs)
        return '+'.join(terms)

    def __repr__(self):
        return f'UPoly({str(self)!r}, {self.field!r})'


def _gcd_ints(a, b, p):
    # Euclid on ascending int lists without trailing zeros
    while b:
        inv = pow(b[-1], -1, p)
        m = len(b)
        while len(a) >= m:
            c = a[-1] * inv % p
            if c:
                off = len(a) - m
                for j in range(m - 1):
                    a[off + j] = (a[off + j] - c * b[j]) % p
            a.pop()
            while a and not a[-1]:
                a.pop()
        a, b = b, a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd(a, b):
    """Monic greatest common divisor."""
    if not a and not b:
        raise ValueError('gcd(0, 0) is undefined')
    if a.field.is_prime_field:
        return a._from_ints(_gcd_ints(a._ints(), b._ints(), a.field.p))
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and g the monic gcd."""
    if not a and not b:
        raise ValueError('gcd(0, 0) is undefined')
    zero, one = UPoly.zero(a.field, a.var), UPoly.one(a.field, a.var)
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = a.field.one / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def sylvester_matrix(P, Q):
    """Sylvester matrix with deg Q shifted rows of P above deg P rows of Q.

    Column j holds the coefficient of x^(N-1-j), N = deg P + deg Q.
    """
    m, n = P.degree, Q.degree
    N = m + n
    rows = []
    for shift, F in [(s, P) for s in range(n - 1, -1, -1)] + \
                    [(s, Q) for s in range(m - 1, -1, -1)]:
        rows.append([F.coeff(N - 1 - j - shift) for j in range(N)])
    return rows


def _leading_minors(M, ncols, zero, one):
    # det of rows S (sorted tuple) against columns 0..|S|-1, for all S with |S| <= ncols;
    # Laplace expansion along the last column, so no division is ever needed
    nrows = len(M)
    D = {(): one}
    for k in range(1, ncols + 1):
        col = k - 1
        nxt = {}
        for S in itertools.combinations(range(nrows), k):
            acc = zero
            for pos, i in enumerate(S):
                entry = M[i][col]
                if not entry:
                    continue
                sub = D.get(S[:pos] + S[pos + 1:])
                if sub is None or not sub:
                    continue
                term = entry * sub
                acc = acc - term if (pos + col) % 2 else acc + term
            nxt[S] = acc
        D = nxt
    return D


def determinant(M, field):
    """Division-free determinant of a square matrix (list of rows)."""
    n = len(M)
    if n == 0:
        return field.one
    return _leading_minors(M, n, field.zero, field.one)[tuple(range(n))]


def resultant(P, Q):
    return determinant(sylvester_matrix(P, Q), P.field)


def ext_resultant(P, Q):
    """Return ``(U, V, R)`` with ``U*P + V*Q == R`` and R the exact resultant.

    U and V are read off as cofactors along the last column of the Sylvester
    matrix, so the computation is division-free and R is Res(P, Q) itself,
    not a multiple of it.  When P and Q share a factor, R is zero and U, V
    instead satisfy ``U*P + V*Q == gcd(P, Q)``.
    """
    if not P or not Q:
        raise ValueError('ext_resultant of the zero polynomial')
    m, n = P.degree, Q.degree
    N = m + n
    if N == 0:
        raise ValueError('ext_resultant needs a nonconstant argument')
    F, var = P.field, P.var
    M = sylvester_matrix(P, Q)
    D = _leading_minors(M, N - 1, F.zero, F.one)
    rows = tuple(range(N))
    cof = []
    for i in rows:
        minor = D[rows[:i] + rows[i + 1:]]
        cof.append(-minor if (i + N - 1) % 2 else minor)
    R = F.zero
    for i in rows:
        if M[i][N - 1] and cof[i]:
            R = R + M[i][N - 1] * cof[i]
    if not R:
        g, s, t = xgcd(P, Q)
        return s, t, F.zero
    U = UPoly._make([cof[n - 1 - k] for k in range(n)], F, var)
    V = UPoly._make([cof[n + m - 1 - k] for k in range(m)], F, var)
    return U, V, R


def powmod(base, e, modulus):
    """``base**e mod modulus`` by square-and-multiply, reducing every step."""
    if e < 0:
        raise ValueError('negative exponent')
    result = UPoly.one(modulus.field, modulus.var) % modulus
    base = base % modulus
    while e:
        if e & 1:
            result = result * base % modulus
        e >>= 1
        if e:
            base = base * base % modulus
    return result


def modpow(e, P):
    """x^e mod P."""
    if P.degree < 1:
        raise ValueError('modulus must have degree >= 1')
    return powmod(UPoly.gen(P.field, P.var), e, P)
