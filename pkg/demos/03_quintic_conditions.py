"""
Quintic family under two conditions
===================================

For x^5 + a x^2 + b x + c, the conditions 18a^3 + 325bc = 0 and 5b'c = 4c'b
kill four of the five Riccati coefficients, leaving only b1.
"""

from hyperquad import RationalFunctionField
from hyperquad.projective import check_C1, check_C2, check_C3
from hyperquad.riccati import quintic_check

# symbolic: eliminate c, then ap
rep = quintic_check('symbolic')
for i in range(4, -1, -1):
    print(f'b{i} =', rep.b(i))
print('b4 = b3 = b2 = b0 = 0:', rep.vanishing)

# a concrete triple over F_11(T)
K = RationalFunctionField(11)
T = K.T
a, b, c = 8 * T ** 3, 2 * T ** 4, 2 * T ** 5
print()
print('C1, C2, C3:', check_C1(a, b, c), check_C2(a, b, c), check_C3(a, b, c))
rep = quintic_check('instantiated', 11)
print('P =', rep.P)
print('b1 =', rep.b(1), ' others vanish:', rep.vanishing)
