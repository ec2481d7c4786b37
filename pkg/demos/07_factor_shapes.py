"""
Factor shapes
=============

Distinct-degree factorization groups the irreducible factors of a
squarefree polynomial over GF(p) by degree; equal-degree splitting then
separates them with a seeded random generator.
"""

from hyperquad import GF, UPoly
from hyperquad.factor import ddf, edf, factor, shape

F = GF(11)
H = UPoly([2, 7] + [0] * 9 + [7, 1], F)
print('H =', H)
for d, g in ddf(H):
    print(f'  degree {d}: product of degree {g.degree}')
sh = shape(H)
print('shape', sh, ' factors', sh.factor_count)

for q in factor(H, seed=0):
    print('  ', q)

# x^2 + 1 splits over GF(5) because 2^2 = -1
print([str(q) for q in edf(UPoly([1, 0, 1], GF(5)), 1, seed=3)])
