"""Projective polynomials H = u x^(r+1) + v x^r + w x + z, r = p^t.

H(alpha) = 0 is the fixed-point equation alpha = f(alpha^r) for the
linear fractional map f(x) = (-v x - z)/(u x + w), which is invertible
exactly when uz - vw != 0.  This module builds H and f, composes f with
Frobenius twists to raise the order, searches for H divisible by a given
P over GF(p), and regenerates the quintic tables for p = 11 and p = 17.
"""

from dataclasses import dataclass
from functools import cached_property

from .factor import is_irreducible, shape, squarefree
from .fields.fp import PrimeField, cube_root
from .upoly import UPoly, modpow


def _field_of(x):
    return x.field


@dataclass(frozen=True)
class ProjParams:
    """Quadruple (u, v, w, z) and order t; requires uz - vw != 0."""

    u: object
    v: object
    w: object
    z: object
    t: int = 1

    def __post_init__(self):
        if self.t < 0:
            raise ValueError('order t must be >= 0')
        if not self.det:
            raise ValueError(f'degenerate quadruple: uz - vw = 0 for {self.quadruple}')

    @classmethod
    def over(cls, field, u, v, w, z, t=1):
        return cls(field(u), field(v), field(w), field(z), t)

    @property
    def field(self):
        return _field_of(self.u)

    @property
    def quadruple(self):
        return (self.u, self.v, self.w, self.z)

    @property
    def det(self):
        return self.u * self.z - self.v * self.w

    @property
    def r(self):
        return self.field.characteristic ** self.t

    def normalized(self):
        """Scale so that u = 1, or v = 1 when u = 0."""
        lead = self.u if self.u else self.v
        inv = self.field.one / lead
        return ProjParams(*(c * inv for c in self.quadruple), t=self.t)

    def __str__(self):
        return '(' + ','.join(str(c) for c in self.quadruple) + ')'


def h_poly(params, var='x'):
    """u x^(r+1) + v x^r + w x + z as an explicit polynomial."""
    u, v, w, z = params.quadruple
    r = params.r
    F = params.field
    cs = [F.zero] * (r + 2)
    cs[0] = cs[0] + z
    cs[1] = cs[1] + w
    cs[r] = cs[r] + v
    cs[r + 1] = cs[r + 1] + u
    return UPoly(cs, F, var)


@dataclass(frozen=True)
class Mobius:
    """x -> (a x + b)/(c x + d)"""

    a: object
    b: object
    c: object
    d: object

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def matrix(self):
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, other):
        return Mobius(self.a * other.a + self.b * other.c,
                      self.a * other.b + self.b * other.d,
                      self.c * other.a + self.d * other.c,
                      self.c * other.b + self.d * other.d)

    def twist(self, s):
        """Raise every entry to the s-th power (Frobenius image when s = p^k)."""
        return Mobius(self.a ** s, self.b ** s, self.c ** s, self.d ** s)

    def __call__(self, x):
        return (self.a * x + self.b) / (self.c * x + self.d)

    def to_params(self, t):
        # (a x + b)/(c x + d) = (-v x - z)/(u x + w)
        return ProjParams(self.c, -self.a, self.d, -self.b, t)


def mobius(params):
    """Matrix [[-v, -z], [u, w]] of f; its determinant is uz - vw."""
    u, v, w, z = params.quadruple
    return Mobius(-v, -z, u, w)


def order_power(params, m):
    """Iterate alpha = f(alpha^r) m times: M (M^[r]) ... (M^[r^(m-1)]) at order m t."""
    if m < 1:
        raise ValueError('m must be >= 1')
    M = mobius(params)
    r = params.r
    acc = M
    for j in range(1, m):
        acc = acc @ M.twist(r ** j)
    return acc.to_params(m * params.t)


@dataclass(frozen=True)
class Candidate:
    u: object
    v: object
    w: object
    z: object
    t: int
    degenerate: bool   # uz - vw = 0
    trivial: bool      # H is the zero polynomial (only possible when r = 1)

    @property
    def quadruple(self):
        return (self.u, self.v, self.w, self.z)

    @property
    def is_witness(self):
        return not self.degenerate and not self.trivial

    def params(self):
        return ProjParams(self.u, self.v, self.w, self.z, self.t)

    def __str__(self):
        return '(' + ','.join(str(c) for c in self.quadruple) + ')'


@dataclass(frozen=True)
class SearchResult:
    P: UPoly
    t: int
    dimension: int
    candidates: tuple

    @property
    def witnesses(self):
        return [c for c in self.candidates if c.is_witness]

    @property
    def found(self):
        return bool(self.witnesses)


def _kernel_2col(rows, F):
    # basis of {(u, v) : alpha u + beta v = 0 for every row (alpha, beta)}
    pivot = next(((x, y) for x, y in rows if x or y), None)
    if pivot is None:
        return [(F.one, F.zero), (F.zero, F.one)]
    x0, y0 = pivot
    if any(x * y0 - y * x0 for x, y in rows):
        return []
    return [(y0, -x0)]


def find_projective(P, t):
    """All (u, v, w, z) with P | u x^(r+1) + v x^r + w x + z, up to scaling.

    With A = x^(r+1) mod P and B = x^r mod P, the coefficients of
    x^2..x^(d-1) in u A + v B must vanish; w and z are then forced.
    """
    if not P.is_monic() or P.degree < 2:
        raise ValueError('P must be monic of degree >= 2')
    F = P.field
    r = F.characteristic ** t
    B = modpow(r, P)
    A = B * UPoly.gen(F, P.var) % P
    rows = [(A.coeff(k), B.coeff(k)) for k in range(2, P.degree)]
    basis = _kernel_2col(rows, F)
    out = []
    for u, v in basis:
        lead = u if u else v
        inv = F.one / lead
        u, v = u * inv, v * inv
        S = A * u + B * v
        w, z = -S.coeff(1), -S.coeff(0)
        trivial = r == 1 and not u and not z and not (v + w)
        out.append(Candidate(u, v, w, z, t, not (u * z - v * w), trivial))
    return SearchResult(P, t, len(basis), tuple(out))


def absolute_order_upto(P, t_max=2):
    """Least t <= t_max with a hyperquadratic witness for irreducible P, else None."""
    if not is_irreducible(P):
        raise ValueError('absolute order is defined for irreducible P')
    P = P.monic()
    for t in range(t_max + 1):
        if find_projective(P, t).found:
            return t
    return None


# -- the quintic family x^5 + a x^2 + b x + c ------------------------------

@dataclass(frozen=True)
class HQTriple:
    p: int
    a: object
    b: object
    c: object

    def poly(self):
        F = PrimeField(self.p)
        return UPoly([self.c, self.b, self.a, 0, 0, 1], F)

    def __iter__(self):
        return iter((self.a, self.b, self.c))


def check_C1(a, b, c):
    """18 a^3 + 325 b c = 0"""
    return not (18 * a ** 3 + 325 * b * c)


def check_C3(a, b, c):
    """b^5 = 2 c^4"""
    return b ** 5 == 2 * c ** 4


def check_C2(a, b, c):
    """5 b' c = 4 c' b"""
    return 5 * b.derive() * c == 4 * c.derive() * b


def _family_prime(p):
    if p % 6 != 5 or p in (5, 13):
        raise ValueError(f'the quintic recipe needs p = 5 mod 6 and p != 5, 13; got {p}')
    return PrimeField(p)


def gen_triple(p, a):
    """Triple (a, b, c) with b = cr(a^4 cr(u)), c = -18 a^3/(325 b), u = 2 (18/325)^4."""
    F = _family_prime(p)
    a = F(a)
    if not a:
        raise ValueError('a must be nonzero')
    u = 2 * (F(18) / 325) ** 4
    b = cube_root(a ** 4 * cube_root(u))
    c = -18 * a ** 3 / (325 * b)
    return HQTriple(p, a, b, c)


def quartic_family(p, a, b):
    """P = x^4 + a x^2 + b x - a^2/12 searched at order i = p mod 3."""
    if p <= 3:
        raise ValueError('the quartic family needs p > 3')
    F = PrimeField(p)
    a, b = F(a), F(b)
    P = UPoly([-a * a / 12, b, a, 0, 1], F)
    return P, find_projective(P, p % 3)


@dataclass(frozen=True)
class TableRow:
    p: int
    a: int
    b: int
    c: int
    H: tuple          # (u, v, w, z) as ints, or None
    degenerate: bool  # only degenerate relations were found
    P_shape: str
    H_shape: str

    def to_json(self):
        H = None if self.H is None else dict(zip('uvwz', self.H))
        return {'p': self.p, 'a': self.a, 'b': self.b, 'c': self.c, 'H': H,
                'degenerate': self.degenerate, 'P_shape': self.P_shape,
                'H_shape': self.H_shape}

    @cached_property
    def params(self):
        if self.H is None:
            return None
        return ProjParams.over(PrimeField(self.p), *self.H, t=1)


def _shape_str(f):
    return str(shape(f)) if squarefree(f) else 'not squarefree'


def table_row(p, a, t=1):
    tr = gen_triple(p, a)
    P = tr.poly()
    res = find_projective(P, t)
    wit = res.witnesses
    H = H_shape = None
    if wit:
        cand = wit[0]
        H = tuple(int(x) for x in cand.quadruple)
        H_shape = _shape_str(h_poly(cand.params()))
    degenerate = not wit and bool(res.candidates)
    return TableRow(p, int(tr.a), int(tr.b), int(tr.c), H, degenerate,
                    _shape_str(P), H_shape)


def make_table(p, t=1):
    """One row per a in GF(p)^*, sorted by a."""
    _family_prime(p)
    return [table_row(p, a, t) for a in range(1, p)]
