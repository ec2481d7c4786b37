"""
Coefficient fields and polynomials
==================================

Three exact fields carry a derivation: GF(p) (trivially zero), F_p(T) with
d/dT, and a symbolic field where every base symbol a has a partner ap
standing for its derivative.
"""

from hyperquad import GF, RationalFunctionField, SymbolicField, UPoly, ext_resultant, modpow

F = GF(11)
print(F(7) * F(8), F(7) ** -1)

# F_p(T) keeps fractions in lowest terms with a monic denominator
K = RationalFunctionField(11)
T = K.T
f = (T ** 2 + 1) / T
print('f  =', f)
print("f' =", f.derive())

# symbols differentiate into their primed partners
S = SymbolicField()
a, b = S.var('a'), S.var('b')
print((a ** 2 * b).derive())
print((a / b).derive())

# substitution carries derivatives along: c -> -a^2/12 also sends cp -> -a*ap/6
cp = S.var('cp')
print(cp.substitute({'c': -a ** 2 / 12}))

# polynomials in x; x^5 mod P and the extended resultant
P = UPoly([9, 7, 1, 0, 0, 1], F)
print('P =', P)
print('x^5 mod P =', modpow(5, P))
U, V, R = ext_resultant(P, P.derivative())
print('Res(P, dP/dx) =', R, ' identity holds:', U * P + V * P.derivative() == R)
