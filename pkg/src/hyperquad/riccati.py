"""Riccati numerators of algebraic elements over differential fields.

If P(alpha) = 0 with P monic and squarefree over a field K with a
derivation, differentiating gives alpha' P_x(alpha) + P_T(alpha) = 0,
where P_x is the derivative in the main variable and P_T applies the
derivation to the coefficients.  With U P + V P_x = R = Res(P, P_x),

    Qr = V * P_T mod P   satisfies   Qr * P_x == R * P_T  (mod P),

so Qr(alpha) = -R * alpha'.  Quadratic, quartic and quintic families are
checked here; the coefficient names b_0..b_{d-1} follow Qr's powers of x.
"""

from dataclasses import dataclass
from fractions import Fraction

from .fields.ratfunc import RationalFunctionField
from .fields.symbolic import SymbolicField
from .upoly import UPoly, ext_resultant


def coeff_derivative(P):
    """Apply the coefficient derivation; x itself is a constant."""
    return P.map_coeffs(lambda c: c.derive())


@dataclass(frozen=True)
class RiccatiOutput:
    P: UPoly
    R: object
    disc: object
    Qr: UPoly

    def b(self, i):
        return self.Qr.coeff(i)

    @property
    def coefficients(self):
        """[b_0, ..., b_{d-1}]"""
        return [self.Qr.coeff(i) for i in range(self.P.degree)]

    def check_contract(self):
        """Qr * P_x - R * P_T reduces to zero modulo P."""
        P = self.P
        return not (self.Qr * P.derivative() - coeff_derivative(P) * self.R) % P


def riccati_numerator(P):
    if P.degree < 2 or not P.is_monic():
        raise ValueError('P must be monic of degree >= 2')
    dP = P.derivative()
    U, V, R = ext_resultant(P, dP)
    if not R:
        raise ValueError('P is not squarefree: Res(P, dP/dx) = 0')
    d = P.degree
    disc = -R if (d * (d - 1) // 2) % 2 else R
    Qr = V * coeff_derivative(P) % P
    return RiccatiOutput(P, R, disc, Qr)


def quadratic_closed_form(a, b, field):
    """(a a' - 2 b') x + 2 b a' - a b', the Riccati numerator of x^2 + a x + b."""
    da, db = a.derive(), b.derive()
    return UPoly([2 * b * da - a * db, a * da - 2 * db], field)


@dataclass(frozen=True)
class QuarticReport:
    before: RiccatiOutput
    after: UPoly

    @property
    def leading(self):
        return self.after.coeff(3)


def quartic_check(field=None):
    """x^4 + a x^2 + b x + c with c -> -a^2/12 (and cp -> -a ap/6)."""
    S = field or SymbolicField()
    a, b, c = S.var('a'), S.var('b'), S.var('c')
    P = UPoly([c, b, a, 0, 1], S)
    out = riccati_numerator(P)
    sub = {'c': a ** 2 * Fraction(-1, 12)}
    after = out.Qr.map_coeffs(lambda t: t.substitute(sub))
    return QuarticReport(out, after)


@dataclass(frozen=True)
class QuinticReport:
    P: UPoly
    coefficients: list  # b_0..b_4

    def b(self, i):
        return self.coefficients[i]

    @property
    def vanishing(self):
        """b4 = b3 = b2 = b0 = 0."""
        return all(not self.coefficients[i] for i in (0, 2, 3, 4))


def _quintic_symbolic():
    S = SymbolicField()
    a, b, c = S.var('a'), S.var('b'), S.var('c')
    P = UPoly([c, b, a, 0, 0, 1], S)
    out = riccati_numerator(P)
    # C1 fixes c; C2 combined with the derivative of C1 gives 3 a b' = 4 a' b
    step1 = {'c': -18 * a ** 3 / (325 * b)}
    step2 = {'ap': 3 * a * S.var('bp') / (4 * b)}
    coeffs = [t.substitute(step1).substitute(step2, auto_derive=False)
              for t in out.coefficients]
    return QuinticReport(P, coeffs)


def quintic_check(mode='symbolic', p=11, triple=None):
    """Riccati numerator of x^5 + a x^2 + b x + c under (C1) and (C2).

    ``mode='instantiated'`` works over F_p(T) with an explicit triple
    (default (8T^3, 2T^4, 2T^5), which satisfies C1 and C3 over F_11).
    """
    if mode == 'symbolic':
        return _quintic_symbolic()
    if mode != 'instantiated':
        raise ValueError(f'unknown mode {mode!r}')
    if p in (2, 3, 5, 13):
        raise ValueError(f'characteristic {p} divides 18 or 325')
    K = RationalFunctionField(p)
    if triple is None:
        if p != 11:
            raise ValueError('default triple is only valid for p = 11')
        T = K.T
        triple = (8 * T ** 3, 2 * T ** 4, 2 * T ** 5)
    a, b, c = (K(v) for v in triple)
    out = riccati_numerator(UPoly([c, b, a, 0, 0, 1], K))
    return QuinticReport(out.P, out.coefficients)
