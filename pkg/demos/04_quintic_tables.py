"""
Projective polynomials for the quintic family
=============================================

Over GF(p) with p = 5 mod 6, each a != 0 gives a triple (a, b, c) and
P = x^5 + a x^2 + b x + c.  We look for H = u x^(p+1) + v x^p + w x + z
divisible by P.  Such H turn up for p = 11 and p = 17 but not for the
next primes in the family.
"""

from hyperquad.cli import format_table
from hyperquad.factor import shape
from hyperquad.projective import find_projective, gen_triple, h_poly, make_table

tr = gen_triple(11, 1)
P = tr.poly()
print('triple', tuple(int(x) for x in tr), ' P =', P, ' shape', shape(P))

res = find_projective(P, 1)
cand = res.witnesses[0]
H = h_poly(cand.params())
print('H =', H, ' shape', shape(H))
print('H mod P =', H % P)

print()
print(format_table(make_table(11)))
print()
print(format_table(make_table(17)))

print()
for p in (23, 29, 41, 47):
    hits = sum(r.H is not None for r in make_table(p))
    print(f'p = {p}: {hits} hits')
