"""
Quartic family
==============

P = x^4 + a x^2 + b x - a^2/12 over GF(p), p > 3, divides a projective
polynomial of order p mod 3.  Some (a, b) only give degenerate relations
(uz - vw = 0), so the search reports those separately.
"""

from hyperquad.projective import h_poly, quartic_family

P, res = quartic_family(7, 1, 2)
print('P =', P)
for c in res.candidates:
    H = h_poly(c.params())
    q, r = divmod(H, P)
    print('H =', H, '  H/P =', q, '  remainder', r)

# the same search at (1, 1) lands on a degenerate quadruple
_, res = quartic_family(7, 1, 1)
print('(a, b) = (1, 1):', [(str(c), c.degenerate) for c in res.candidates])

# every (a, b) with a != 0 at p = 13 (order 1)
found = degenerate = 0
for a in range(1, 13):
    for b in range(13):
        _, res = quartic_family(13, a, b)
        found += res.found
        degenerate += bool(res.candidates) and not res.found
print(f'p = 13: {found} nondegenerate, {degenerate} degenerate only, out of {12 * 13}')
