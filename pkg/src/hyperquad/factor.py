"""Squarefree test, distinct-degree factorization and factor shapes over GF(p)."""

import random
from dataclasses import dataclass, field

from .upoly import UPoly, gcd, powmod


def _check_fp(f):
    if not getattr(f.field, 'is_prime_field', False):
        raise TypeError('factorization is only implemented over GF(p)')


def squarefree(f):
    """True iff gcd(f, f') = 1.  A p-th power (f' = 0) is never squarefree."""
    _check_fp(f)
    if not f:
        raise ValueError('zero polynomial')
    df = f.derivative()
    if not df:
        return f.degree == 0
    return gcd(f, df).degree == 0


def ddf(f):
    """Distinct-degree factorization of a monic squarefree polynomial.

    Returns ``[(d, g_d), ...]`` where g_d is the product of all irreducible
    factors of degree d; the g_d multiply back to f.
    """
    _check_fp(f)
    if not f.is_monic():
        raise ValueError('ddf needs a monic polynomial')
    if not squarefree(f):
        raise ValueError('ddf needs a squarefree polynomial')
    p = f.field.p
    x = UPoly.gen(f.field, f.var)
    out = []
    rest = f
    h = x % rest if rest.degree > 0 else x
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, rest)
        g = gcd(h - x, rest)
        if g.degree > 0:
            out.append((d, g))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest.degree, rest))
    return out


@dataclass(frozen=True)
class FactorShape:
    counts: dict = field(default_factory=dict)  # degree -> number of factors

    @property
    def degree(self):
        return sum(d * n for d, n in self.counts.items())

    @property
    def factor_count(self):
        return sum(self.counts.values())

    def __str__(self):
        parts = []
        for d in sorted(self.counts, reverse=True):
            n = self.counts[d]
            parts.append(str(d) if n == 1 else f'{d}^{n}')
        return '*'.join(parts)

    @classmethod
    def parse(cls, text):
        counts = {}
        for part in text.split('*'):
            d, _, n = part.partition('^')
            counts[int(d)] = counts.get(int(d), 0) + int(n or 1)
        return cls(counts)


def shape(f):
    """Multiset of irreducible factor degrees, e.g. ``2^2*1`` for P of Table 1."""
    if f.degree < 1:
        raise ValueError('shape of a constant')
    if not squarefree(f):
        raise ValueError('shape needs a squarefree polynomial')
    return FactorShape({d: g.degree // d for d, g in ddf(f.monic())})


def is_irreducible(f):
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    if not squarefree(f):
        return False
    parts = ddf(f.monic())
    return len(parts) == 1 and parts[0][0] == f.degree


def _sort_key(g):
    return (g.degree, [c.value for c in reversed(g.coeffs)])


def edf(g, d, seed=0):
    """Cantor-Zassenhaus equal-degree split of g into its degree-d factors.

    ``seed`` may be an int or a ``random.Random``; output is sorted, so a
    fixed seed gives reproducible results (and the factor set never depends
    on the seed).
    """
    _check_fp(g)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if g.degree % d:
        raise ValueError(f'degree {g.degree} is not a multiple of {d}')
    g = g.monic()
    F, p = g.field, g.field.p
    todo, done = [g], []
    while todo:
        h = todo.pop()
        if h.degree == d:
            done.append(h)
            continue
        while True:
            a = UPoly([rng.randrange(p) for _ in range(h.degree)], F, g.var)
            if a.degree < 1:
                continue
            if p == 2:
                b, t = a, a
                for _ in range(d - 1):
                    t = t * t % h
                    b = b + t
            else:
                b = powmod(a, (p ** d - 1) // 2, h) - 1
            s = gcd(b, h) if b else h
            if 0 < s.degree < h.degree:
                todo += [s, h // s]
                break
    return sorted(done, key=_sort_key)


def factor(f, seed=0):
    """Irreducible monic factors of a squarefree polynomial, sorted."""
    out = []
    for d, g in ddf(f.monic()):
        out += edf(g, d, seed)
    return sorted(out, key=_sort_key)
