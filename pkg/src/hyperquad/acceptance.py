"""Acceptance checks behind ``hyperquad selftest``.

Each check returns ``(passed, detail)``; :func:`run_all` prints one line
per check.  The reference tables are transcribed in ``REFERENCE``.
"""

import json
import random
import time
from fractions import Fraction

from .factor import ddf, shape, squarefree
from .fields.fp import PrimeField
from .fields.ratfunc import RationalFunctionField
from .fields.symbolic import SymbolicField
from .projective import gen_triple, h_poly, make_table, quartic_family
from .riccati import (coeff_derivative, quadratic_closed_form, quartic_check,
                      quintic_check, riccati_numerator)
from .upoly import UPoly, ext_resultant, gcd

# (a, b, c) -> (u, v, w, z)
REFERENCE = {
    11: {
        (1, 7, 9): (1, 7, 7, 2), (2, 10, 2): (1, 5, 5, 10), (3, 2, 9): (1, 8, 8, 8),
        (4, 8, 9): (1, 2, 2, 6), (5, 6, 9): (1, 10, 10, 7), (6, 6, 2): (1, 1, 1, 7),
        (7, 8, 2): (1, 9, 9, 6), (8, 2, 2): (1, 3, 3, 8), (9, 10, 9): (1, 6, 6, 10),
        (10, 7, 2): (1, 4, 4, 2),
    },
    17: {
        (1, 15, 13): (1, 13, 13, 3), (2, 2, 15): (1, 2, 2, 5), (3, 9, 7): (1, 6, 6, 11),
        (4, 15, 16): (1, 16, 16, 14), (5, 9, 11): (1, 7, 7, 6), (6, 8, 12): (1, 14, 14, 7),
        (7, 8, 3): (1, 12, 12, 10), (8, 2, 8): (1, 9, 9, 12), (9, 2, 9): (1, 8, 8, 12),
        (10, 8, 14): (1, 5, 5, 10), (11, 8, 5): (1, 3, 3, 7), (12, 9, 6): (1, 10, 10, 6),
        (13, 15, 1): (1, 1, 1, 14), (14, 9, 10): (1, 11, 11, 11), (15, 2, 2): (1, 15, 15, 5),
        (16, 15, 4): (1, 4, 4, 3),
    },
}


def _sym():
    S = SymbolicField()
    return S, {n: S.var(n) for n in S.variables}


def check_tables():
    for p, expected in REFERENCE.items():
        t0 = time.perf_counter()
        rows = make_table(p)
        elapsed = time.perf_counter() - t0
        got = {(r.a, r.b, r.c): r.H for r in rows}
        if got != expected:
            return False, f'p={p}: table differs'
        first = '\n'.join(json.dumps(r.to_json()) for r in rows)
        again = '\n'.join(json.dumps(r.to_json()) for r in make_table(p))
        if first != again:
            return False, f'p={p}: JSON output not reproducible'
        if elapsed >= 1.0:
            return False, f'p={p}: {elapsed:.2f}s >= 1s'
    return True, '10 + 16 rows match'


def check_divisibility():
    for p in REFERENCE:
        for r in make_table(p):
            P = gen_triple(p, r.a).poly()
            if h_poly(r.params) % P or not r.params.det:
                return False, f'p={p} a={r.a}'
    return True, '26 rows: P | H and uz - vw != 0'


def check_quadratic(n=200, seed=0):
    S, v = _sym()
    a, b, ap, bp = v['a'], v['b'], v['ap'], v['bp']
    out = riccati_numerator(UPoly([b, a, 1], S))
    if out.Qr != UPoly([2 * b * ap - a * bp, a * ap - 2 * bp], S) or out.R != 4 * b - a * a:
        return False, 'symbolic quadratic'
    rng = random.Random(seed)
    done = 0
    while done < n:
        K = RationalFunctionField(rng.choice([5, 7, 11, 13]))
        a, b = K.random(rng), K.random(rng)
        P = UPoly([b, a, 1], K)
        if not (a * a - 4 * b):
            continue
        if riccati_numerator(P).Qr != quadratic_closed_form(a, b, K):
            return False, f'F_{K.p}(T) instance {done}'
        done += 1
    return True, f'symbolic + {n} F_p(T) instances'


def check_quartic():
    t0 = time.perf_counter()
    S, v = _sym()
    a, b, c, ap, bp, cp = (v[k] for k in ('a', 'b', 'c', 'ap', 'bp', 'cp'))
    rep = quartic_check(S)
    x2 = ((4 * cp * b + 16 * bp * c) * a ** 2 + (-6 * bp * b ** 2 - 32 * ap * c * b) * a
          + (9 * ap * b ** 3 + 48 * cp * c * b - 64 * bp * c ** 2))
    x1 = (Fraction(32, 27) * ap * a ** 5 + Fraction(8, 3) * bp * b * a ** 3
          + 4 * ap * b ** 2 * a ** 2 + 9 * bp * b ** 3)
    x0 = (Fraction(-8, 9) * bp * a ** 5 + Fraction(4, 3) * ap * b * a ** 4
          - 3 * bp * b ** 2 * a ** 2 + Fraction(9, 2) * ap * b ** 3 * a)
    ok = (rep.before.b(2) == x2 and not rep.after.coeff(3)
          and rep.after.coeff(1) == x1 and rep.after.coeff(0) == x0)
    elapsed = time.perf_counter() - t0
    return ok and elapsed < 5, f'{elapsed:.2f}s'


def check_quintic():
    t0 = time.perf_counter()
    ok = quintic_check('symbolic').vanishing and quintic_check('instantiated', 11).vanishing
    elapsed = time.perf_counter() - t0
    return ok and elapsed < 10, f'{elapsed:.2f}s'


def check_quartic_family(n=25, seed=0):
    rng = random.Random(seed)
    for p in (5, 7, 11, 13):
        for _ in range(n):
            a, b = rng.randrange(1, p), rng.randrange(p)
            _, res = quartic_family(p, a, b)
            if not res.candidates:
                return False, f'p={p} a={a} b={b}'
    F = PrimeField(7)
    a, b = F(1), F(2)
    lhs = UPoly([2 * a * a * (b * b + a ** 3), 4 * b * (b * b + 4 * a ** 3),
                 0, 0, 0, 0, 0, 3 * b, a], F)
    right = UPoly([4 * (b * b + a ** 3), 3 * a * b, 6 * a * a, 3 * b, a], F)
    P, _ = quartic_family(7, 1, 2)
    if P * right != lhs:
        return False, 'p=7 identity'
    return True, f'{4 * n} searches + p=7 identity'


def check_shapes():
    for p in REFERENCE:
        for r in make_table(p):
            if str(shape(gen_triple(p, r.a).poly())) != '2^2*1':
                return False, f'P shape p={p} a={r.a}'
            sh = shape(h_poly(r.params))
            if sh.counts != {2: (p - 1) // 2, 1: 2} or sh.factor_count != (p + 3) // 2:
                return False, f'H shape p={p} a={r.a}'
    return True, 'P: 2^2*1, H: 2^((p-1)/2)*1^2'


def check_negative_scan():
    t0 = time.perf_counter()
    hits = sum(r.H is not None for p in (23, 29) for r in make_table(p))
    elapsed = time.perf_counter() - t0
    return hits == 0 and elapsed < 5, f'{hits} hits, {elapsed:.2f}s'


def _random_poly(F, rng, deg, monic=True):
    cs = [F.random(rng) for _ in range(deg)]
    return UPoly(cs + [F.one if monic else F.random(rng)], F)


def check_properties(seed=0):
    rng = random.Random(seed)
    S = SymbolicField()
    # extended resultant identity across the three coefficient fields
    for i in range(500):
        kind = i % 3
        if kind == 0:
            F = PrimeField(rng.choice([5, 7, 11, 13]))
            P, Q = _random_poly(F, rng, rng.randint(1, 6)), _random_poly(F, rng, rng.randint(1, 5))
        elif kind == 1:
            F = RationalFunctionField(rng.choice([5, 7, 11]))
            P, Q = _random_poly(F, rng, rng.randint(1, 3)), _random_poly(F, rng, rng.randint(1, 3))
        else:
            F = S
            P = UPoly([S.random(rng) for _ in range(rng.randint(1, 3))] + [1], S)
            Q = P.derivative() if P.degree > 1 else UPoly([S.random(rng), 1], S)
        U, V, R = ext_resultant(P, Q)
        target = UPoly([R], F) if R else gcd(P, Q)
        if U * P + V * Q != target:
            return False, f'ext_resultant instance {i}'
    # Leibniz and additivity
    for i in range(1000):
        if i % 2:
            K = RationalFunctionField(rng.choice([5, 7, 11]))
            x, y = K.random(rng), K.random(rng)
        else:
            x, y = S.random(rng, terms=2, fraction=True), S.random(rng, terms=2, fraction=True)
        if (x * y).derive() != x.derive() * y + x * y.derive() or \
                (x + y).derive() != x.derive() + y.derive():
            return False, f'derivation pair {i}'
    # Riccati congruence
    done = 0
    while done < 200:
        K = RationalFunctionField(rng.choice([7, 11, 13]))
        P = _random_poly(K, rng, rng.randint(2, 4))
        U, V, R = ext_resultant(P, P.derivative())
        if not R:
            continue
        out = riccati_numerator(P)
        if (out.Qr * P.derivative() - coeff_derivative(P) * out.R) % P:
            return False, f'Riccati congruence {done}'
        done += 1
    # DDF reconstruction and brute-force shapes
    for _ in range(200):
        F = PrimeField(rng.choice([2, 3, 5, 7, 11, 13]))
        f = _random_poly(F, rng, rng.randint(1, 6))
        if not squarefree(f):
            continue
        prod = UPoly.one(F)
        for _, g in ddf(f):
            prod = prod * g
        if prod != f or shape(f).counts != _trial_division_shape(f):
            return False, f'ddf on {f} over GF({F.p})'
    return True, '500 resultants, 1000 derivation pairs, 200 congruences, ddf'


def _trial_division_shape(f):
    # peel off the smallest-degree monic divisor, which is necessarily irreducible
    F, p = f.field, f.field.p
    counts = {}
    while f.degree > 0:
        found = None
        for d in range(1, f.degree // 2 + 1):
            for n in range(p ** d):
                cs = [(n // p ** k) % p for k in range(d)] + [1]
                g = UPoly(cs, F)
                if not f % g:
                    found = g
                    break
            if found is not None:
                break
        found = found or f
        counts[found.degree] = counts.get(found.degree, 0) + 1
        f = f // found
    return counts


CHECKS = [
    ('1 table reproduction', check_tables),
    ('2 divisibility', check_divisibility),
    ('3 quadratic Riccati closed form', check_quadratic),
    ('4 quartic computation', check_quartic),
    ('5 quintic differential check', check_quintic),
    ('6 quartic family search', check_quartic_family),
    ('7 factor shapes', check_shapes),
    ('8 negative scan', check_negative_scan),
    ('9 property suites', check_properties),
]


def run_all(verbose=True):
    ok = True
    for name, fn in CHECKS:
        passed, detail = fn()
        ok &= passed
        if verbose:
            print(f'{"PASS" if passed else "FAIL"}  {name}: {detail}')
    return ok
