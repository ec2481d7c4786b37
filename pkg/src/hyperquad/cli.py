"""Command-line interface: ``hyperquad <command> ...``.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success or
found, 1 legitimate empty result, 2 usage or parse error.
Setting ``HYPERQUAD_JSON=1`` makes ``--json`` the default.
"""

import argparse
import json
import os
import sys

from .factor import edf, ddf, shape, squarefree
from .fields.fp import PrimeField, is_prime
from .parsing import ParseError, make_field, parse_poly, parse_scalar
from .projective import (ProjParams, find_projective, gen_triple, h_poly, make_table,
                         order_power, quartic_family)
from .riccati import quintic_check, riccati_numerator
from .upoly import UPoly

EXIT_OK, EXIT_EMPTY, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _json_default():
    return os.environ.get('HYPERQUAD_JSON', '') == '1'


def _emit(obj):
    print(json.dumps(obj))


def _variables(args):
    return tuple(v.strip() for v in args.vars.split(',')) if args.vars else None


def _quad(c):
    return {k: int(x) for k, x in zip('uvwz', c.quadruple)}


# ---- commands

def cmd_riccati(args):
    field = make_field(args.mode, args.p, _variables(args))
    P = parse_poly(args.poly, field=field)
    out = riccati_numerator(P.monic())
    R, disc, coeffs = out.R, out.disc, out.coefficients
    if args.subst:
        if args.mode != 'sym':
            raise UsageError('--subst is only available in sym mode')
        assignments = {}
        for item in args.subst:
            name, sep, expr = item.partition('=')
            if not sep:
                raise UsageError(f'--subst expects NAME=EXPR, got {item!r}')
            assignments[name.strip()] = parse_scalar(expr, field=field)
        R, disc = R.substitute(assignments), disc.substitute(assignments)
        coeffs = [c.substitute(assignments) for c in coeffs]
    if args.json:
        _emit({'R': str(R), 'disc': str(disc),
               'Q': {f'b{i}': str(c) for i, c in enumerate(coeffs)},
               'Qr': str(UPoly._make(coeffs, field, 'x'))})
    else:
        print(f'R = {R}')
        print(f'disc = {disc}')
        for i in range(len(coeffs) - 1, -1, -1):
            print(f'b{i} = {coeffs[i]}')
    return EXIT_OK


def cmd_find_h(args):
    P = parse_poly(args.poly, 'fp', args.p)
    if P.degree < 2:
        raise UsageError('P must have degree >= 2')
    res = find_projective(P.monic(), args.order)
    if args.json:
        _emit({'p': args.p, 'order': args.order, 'P': str(P.monic()),
               'dimension': res.dimension,
               'candidates': [dict(_quad(c), degenerate=c.degenerate, trivial=c.trivial)
                              for c in res.candidates]})
    else:
        print(f'solution space dimension: {res.dimension}')
        for c in res.candidates:
            tags = [t for t, on in (('degenerate', c.degenerate), ('trivial', c.trivial)) if on]
            suffix = f'  [{", ".join(tags)}]' if tags else ''
            print(f'{c}  H = {h_poly(c.params()) if c.is_witness else "-"}{suffix}')
        if not res.found:
            print('no projective polynomial found', file=sys.stderr)
    return EXIT_OK if res.found else EXIT_EMPTY


def cmd_triple(args):
    tr = gen_triple(args.p, args.a)
    if args.json:
        _emit({'p': args.p, 'a': int(tr.a), 'b': int(tr.b), 'c': int(tr.c),
               'P': str(tr.poly())})
    else:
        print(f'({tr.a},{tr.b},{tr.c})  P = {tr.poly()}')
    return EXIT_OK


def format_table(rows):
    """Two-column layout, rows split between left and right halves."""
    def cell(r):
        P = f'({r.a},{r.b},{r.c})'
        H = '(' + ','.join(map(str, r.H)) + ')' if r.H else 'no H found'
        return P, H
    cells = [cell(r) for r in rows]
    half = (len(cells) + 1) // 2
    left, right = cells[:half], cells[half:]
    wp = max(len(c[0]) for c in cells)
    wh = max(len(c[1]) for c in cells)
    lines = [f'p = {rows[0].p}', f'{"P":<{wp}}  {"H":<{wh}}  ||  {"P":<{wp}}  H']
    for i, (P, H) in enumerate(left):
        line = f'{P:<{wp}}  {H:<{wh}}'
        if i < len(right):
            line += f'  ||  {right[i][0]:<{wp}}  {right[i][1]}'
        lines.append(line.rstrip())
    return '\n'.join(lines)


def cmd_tables(args):
    rows = make_table(args.p, args.order)
    if args.json:
        for r in rows:
            _emit(r.to_json())
    else:
        print(format_table(rows))
    return EXIT_OK


def cmd_quartic(args):
    p = args.p
    P, res = quartic_family(p, args.a, args.b)
    F = PrimeField(p)
    payload = {'p': p, 'order': p % 3, 'P': str(P), 'dimension': res.dimension,
               'candidates': [dict(_quad(c), degenerate=c.degenerate) for c in res.candidates]}
    if args.verify_identity:
        if p != 7:
            raise UsageError('--verify-identity applies to p = 7 only')
        a, b = F(args.a), F(args.b)
        lhs = UPoly([2 * a * a * (b * b + a ** 3), 4 * b * (b * b + 4 * a ** 3),
                     0, 0, 0, 0, 0, 3 * b, a], F)
        left = UPoly([4 * a * a, b, a, 0, 1], F)
        right = UPoly([4 * (b * b + a ** 3), 3 * a * b, 6 * a * a, 3 * b, a], F)
        payload['identity_holds'] = lhs == left * right
        payload['P_matches'] = left == P
    if args.json:
        _emit(payload)
    else:
        print(f'P = {P}   (order {p % 3}, solution space dimension {res.dimension})')
        for c in res.candidates:
            flag = '  [degenerate]' if c.degenerate else ''
            print(f'{c}  H = {h_poly(c.params()) if not c.degenerate else "-"}{flag}')
        if args.verify_identity:
            print(f'p=7 product identity: {"holds" if payload["identity_holds"] else "FAILS"}')
    if args.verify_identity and not (payload['identity_holds'] and payload['P_matches']):
        return EXIT_EMPTY
    return EXIT_OK if res.candidates else EXIT_EMPTY


def cmd_quintic(args):
    if args.mode == 'sym':
        rep = quintic_check('symbolic')
    else:
        p = args.p if args.p is not None else 11
        triple = None
        if args.triple:
            K = make_field('ratfunc', p)
            parts = args.triple.split(';')
            if len(parts) != 3:
                raise UsageError('--triple expects "a;b;c"')
            triple = tuple(parse_scalar(s, field=K) for s in parts)
        rep = quintic_check('instantiated', p, triple)
    coeffs = rep.coefficients
    if args.json:
        _emit({'P': str(rep.P), **{f'b{i}': str(coeffs[i]) for i in range(4, -1, -1)},
               'vanishing': rep.vanishing})
    else:
        print(f'P = {rep.P}')
        for i in range(4, -1, -1):
            print(f'b{i} = {coeffs[i]}')
        print(f'b4 = b3 = b2 = b0 = 0: {rep.vanishing}')
    return EXIT_OK if rep.vanishing else EXIT_EMPTY


def cmd_factor_shape(args):
    f = parse_poly(args.poly, 'fp', args.p)
    if f.degree < 1:
        raise UsageError('constant polynomial')
    if not squarefree(f):
        raise UsageError('polynomial is not squarefree')
    sh = shape(f)
    factors = None
    if args.factors:
        factors = []
        for d, g in ddf(f.monic()):
            factors += [str(q) for q in edf(g, d, args.seed)]
    if args.json:
        obj = {'shape': str(sh), 'factor_count': sh.factor_count, 'degree': sh.degree}
        if factors is not None:
            obj['factors'] = factors
        _emit(obj)
    else:
        print(sh)
        for q in factors or ():
            print(f'  {q}')
    return EXIT_OK


def cmd_order_power(args):
    F = PrimeField(args.p)
    try:
        quad = [int(s) for s in args.h.split(',')]
    except ValueError:
        raise UsageError('--h expects u,v,w,z integers') from None
    if len(quad) != 4:
        raise UsageError('--h expects four values u,v,w,z')
    params = ProjParams.over(F, *quad, t=args.t)
    out = order_power(params, args.m)
    if args.json:
        _emit({'p': args.p, 't': out.t, **{k: int(x) for k, x in zip('uvwz', out.quadruple)}})
    else:
        print(f'{out}  t = {out.t}')
    return EXIT_OK


def _prime_list(text):
    out = []
    for part in text.split(','):
        part = part.strip()
        if '-' in part:
            lo, hi = (int(s) for s in part.split('-'))
            out += [q for q in range(lo, hi + 1)
                    if q % 6 == 5 and q not in (5, 13) and is_prime(q)]
        elif part:
            out.append(int(part))
    return out


def cmd_scan(args):
    try:
        primes = _prime_list(args.primes)
    except ValueError:
        raise UsageError(f'cannot parse prime list {args.primes!r}') from None
    any_hit = False
    for p in primes:
        rows = make_table(p, args.order)
        hits = sum(r.H is not None for r in rows)
        degenerate = sum(r.degenerate for r in rows)
        any_hit |= hits > 0
        if args.json:
            _emit({'p': p, 'order': args.order, 'rows': len(rows), 'hits': hits,
                   'degenerate': degenerate})
        else:
            print(f'p = {p}: {hits}/{len(rows)} hits at order {args.order}'
                  + (f', {degenerate} degenerate' if degenerate else ''))
    return EXIT_OK if any_hit else EXIT_EMPTY


def cmd_selftest(args):
    from .acceptance import run_all
    ok = run_all(verbose=True)
    return EXIT_OK if ok else EXIT_EMPTY


def build_parser():
    parser = argparse.ArgumentParser(
        prog='hyperquad',
        description='Projective polynomials and hyperquadratic elements over finite fields')
    sub = parser.add_subparsers(dest='command', required=True)
    json_default = _json_default()

    def add(name, func, help, aliases=()):
        sp = sub.add_parser(name, help=help, aliases=list(aliases))
        sp.set_defaults(func=func)
        sp.add_argument('--json', action='store_true', default=json_default,
                        help='machine-readable output (one JSON object per line)')
        return sp

    sp = add('riccati', cmd_riccati, 'Riccati numerator Qr of a monic polynomial')
    sp.add_argument('--mode', choices=('sym', 'ratfunc'), required=True)
    sp.add_argument('--p', type=int)
    sp.add_argument('--poly', required=True)
    sp.add_argument('--subst', action='append', metavar='NAME=EXPR',
                    help='substitution; the paired derivative symbol follows automatically')
    sp.add_argument('--vars', help='comma-separated base symbols (default a,b,c,d)')

    sp = add('find-h', cmd_find_h, 'search H = ux^(r+1)+vx^r+wx+z divisible by P')
    sp.add_argument('--p', type=int, required=True)
    sp.add_argument('--order', type=int, default=1)
    sp.add_argument('--poly', required=True)

    sp = add('triple', cmd_triple, 'quintic triple (a,b,c) satisfying C1 and C3')
    sp.add_argument('--p', type=int, required=True)
    sp.add_argument('--a', type=int, required=True)

    sp = add('tables', cmd_tables, 'regenerate the (a,b,c) -> (u,v,w,z) table')
    sp.add_argument('--p', type=int, required=True)
    sp.add_argument('--order', type=int, default=1)

    sp = add('quartic', cmd_quartic, 'search for x^4+ax^2+bx-a^2/12 at order p mod 3')
    sp.add_argument('--p', type=int, required=True)
    sp.add_argument('--a', type=int, required=True)
    sp.add_argument('--b', type=int, required=True)
    sp.add_argument('--verify-identity', action='store_true')

    sp = add('quintic-check', cmd_quintic, 'Riccati coefficients b4..b0 of the quintic family',
             aliases=('quintic',))
    sp.add_argument('--mode', choices=('sym', 'ratfunc'), default='sym')
    sp.add_argument('--p', type=int)
    sp.add_argument('--triple', help='"a;b;c" in T (ratfunc mode)')

    sp = add('factor-shape', cmd_factor_shape, 'irreducible factor degrees, e.g. 2^2*1')
    sp.add_argument('--p', type=int, required=True)
    sp.add_argument('--poly', required=True)
    sp.add_argument('--factors', action='store_true', help='also list the factors')
    sp.add_argument('--seed', type=int, default=0)

    sp = add('order-power', cmd_order_power, 'compose f with its Frobenius twists')
    sp.add_argument('--p', type=int, required=True)
    sp.add_argument('--h', required=True, metavar='u,v,w,z')
    sp.add_argument('--t', type=int, default=1)
    sp.add_argument('--m', type=int, required=True)

    sp = add('scan', cmd_scan, 'run the quintic family over several primes')
    sp.add_argument('--primes', required=True, help='e.g. 11,17,23 or 11-100')
    sp.add_argument('--order', type=int, default=1)

    add('selftest', cmd_selftest, 'run the acceptance checks')
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError, ValueError, TypeError, ZeroDivisionError) as exc:
        print(f'hyperquad {args.command}: error: {exc}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
