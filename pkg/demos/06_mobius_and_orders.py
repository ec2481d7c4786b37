"""
Moebius maps, Frobenius twists and absolute order
=================================================

H(alpha) = 0 means alpha = f(alpha^r) with f(x) = (-v x - z)/(u x + w).
Iterating gives relations of order 2t, 3t, ...; the least order that
works for an irreducible P is its absolute order.
"""

from hyperquad import GF, RationalFunctionField, UPoly
from hyperquad.factor import factor
from hyperquad.projective import (ProjParams, absolute_order_upto, h_poly, mobius,
                                  order_power)

F = GF(11)
params = ProjParams.over(F, 1, 7, 7, 2)
M = mobius(params)
print('matrix', [[int(x) for x in row] for row in M.matrix], ' det', M.det)

# roots of H in GF(11) are fixed points of f
H = h_poly(params)
for x in F:
    if not H(x):
        print(f'root {x}: f(x^11) = {M(x ** 11)}')

# order 2 over GF(11) is just M squared
print('order 2:', order_power(params, 2))

# over F_5(T) the second factor gets T -> T^5
K = RationalFunctionField(5)
T = K.T
twisted = order_power(ProjParams(K(1), T, K(0), K(1), 1), 2)
print('over F_5(T):', twisted, ' det', twisted.det)

# quadratic irreducibles have order 0, cubic ones order 1
print(absolute_order_upto(UPoly([2, 0, 1], GF(5))))
print(absolute_order_upto(UPoly([2, 0, 0, 1], GF(7))))
for q in factor(UPoly([9, 7, 1, 0, 0, 1], F)):
    if q.degree > 1:
        print(q, '->', absolute_order_upto(q))
