"""
Riccati numerators
==================

A root alpha of a monic squarefree P over a differential field satisfies
alpha' = -Qr(alpha)/R with R = Res(P, dP/dx).  When Qr has degree at most 2
the root satisfies a Riccati equation.
"""

from hyperquad import SymbolicField, UPoly
from hyperquad.riccati import quartic_check, riccati_numerator

S = SymbolicField()
a, b = S.var('a'), S.var('b')

# quadratic: everything is explicit
out = riccati_numerator(UPoly([b, a, 1], S))
print('R    =', out.R)
print('disc =', out.disc)
print('Qr   =', out.Qr)
print('contract Qr*P_x = R*P_T mod P:', out.check_contract())

# quartic x^4 + a x^2 + b x + c; the x^3 term disappears once c = -a^2/12
rep = quartic_check()
print()
print('before: b3 =', rep.before.b(3))
print('after c -> -a^2/12:')
for i in range(3, -1, -1):
    print(f'  b{i} =', rep.after.coeff(i))
