"""
Tangent data

The derivatives of tan are polynomials in tan itself,

    d^n/du^n tan(u) = P_n(tan(u)),  P_0 = t,  P_(n+1) = P_n' * (1 + t^2),

and tan at a multiple of pi/12 lives in Q(zeta24). Together these give
every Taylor coefficient the h-series needs, without floating point.

The Maclaurin coefficients of tan come from the ODE tan' = 1 + tan^2
read on formal series, which is how both the Faber-Pandharipande values
<zeta1^n> and the B(u) seed of the S4 recursion are produced.

"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from sympy import Poly, QQ, symbols

from Hodge.algebra.cyclotomic import CycNumber, I, ZERO
from Hodge.utils.errors import NotRational, PoleError, UnsupportedAngle

_T = symbols("t")


@lru_cache(maxsize=None)
def tan_derivative_polynomial(n):
    """
    The polynomial P_n with d^n/du^n tan(u) = P_n(tan(u)).

    Args:
        n (int): Derivative order, n >= 0.

    Returns:
        poly (sympy.Poly): P_n over QQ in the generator t.

    """
    if n < 0:
        raise ValueError("derivative order must be nonnegative, got %d" % n)
    if n == 0:
        return Poly(_T, _T, domain=QQ)
    previous = tan_derivative_polynomial(n - 1)
    return previous.diff(_T) * Poly(1 + _T ** 2, _T, domain=QQ)


@lru_cache(maxsize=None)
def tan_derivative_coefficients(n):
    """Coefficients of P_n as Fractions, constant term first."""
    coeffs = tan_derivative_polynomial(n).all_coeffs()
    return tuple(Fraction(int(c.p), int(c.q)) for c in reversed(coeffs))


def evaluate(coeffs, value):
    """Horner evaluation of an ascending coefficient list at a CycNumber."""
    result = ZERO
    for coeff in reversed(coeffs):
        result = result * value + coeff
    return result


@lru_cache(maxsize=None)
def tan_at(angle):
    """
    tan(angle * pi), exactly.

    Args:
        angle (Fraction): The angle in units of pi. Its denominator must
            divide 12.

    Returns:
        value (CycNumber): A real element of Q(zeta24).

    Raises:
        UnsupportedAngle: If exp(i * angle * pi) is not a power of zeta24.
        PoleError: If cos(angle * pi) = 0.

    """
    angle = Fraction(angle)
    power = angle * 12
    if power.denominator != 1:
        raise UnsupportedAngle("tan(%s pi) is not in Q(zeta24)" % angle)
    rotation = CycNumber.zeta_power(power.numerator)
    inverse = CycNumber.zeta_power(-power.numerator)
    cosine = rotation + inverse
    if not cosine:
        raise PoleError("tan has a pole at %s pi" % angle)
    value = (rotation - inverse) / (I * cosine)
    assert value.is_real(), "tan(%s pi) came out non-real: %r" % (angle, value)
    return value


def tangent_maclaurin(order):
    """
    Maclaurin coefficients a_0..a_order of tan(u), from
    (k+1) a_(k+1) = [k == 0] + sum_j a_j a_(k-j).

    """
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(order):
        total = sum((coeffs[j] * coeffs[k - j] for j in range(k + 1)), Fraction(int(k == 0)))
        coeffs[k + 1] = total / (k + 1)
    return coeffs


def fp_tangent_series(order):
    """
    The one-class integrals <zeta1^n> of Z2xZ2.

    The generating function of <zeta1^n> along the first coordinate axis
    has third derivative (1/2) tan(-u/2), so for even n >= 4

        <zeta1^n> = (n-3)! [u^(n-3)] (1/2) tan(-u/2).

    Args:
        order (int): Largest length n.

    Returns:
        values (dict): n -> Fraction for 0 <= n <= order; zero for odd n
            and for n <= 3.

    """
    tangent = tangent_maclaurin(max(order - 3, 0))
    values = {}
    for n in range(order + 1):
        if n < 4 or n % 2:
            values[n] = Fraction(0)
            continue
        k = n - 3
        values[n] = factorial(k) * Fraction(1, 2) * tangent[k] * Fraction(-1, 2) ** k
    return values


def b_series(order):
    """
    The integrals <tau^2 sigma^(m+1)> of S4, read off

        B(u) = (1/sqrt3) tan(-u/(2 sqrt3) + pi/3),

    whose m-th derivative at 0 is <tau^2 sigma^(m+1)>. The expansion runs
    through Q(zeta24) and every value is checked to be rational.

    Args:
        order (int): Largest m.

    Returns:
        values (list): values[m] = <tau^2 sigma^(m+1)> for 0 <= m <= order.

    Raises:
        NotRational: If some coefficient is irrational.

    """
    root3 = tan_at(Fraction(1, 3))
    inv_root3 = root3.inverse()
    step = -(inv_root3 * Fraction(1, 2))
    values = []
    scale = inv_root3
    for m in range(order + 1):
        value = scale * evaluate(tan_derivative_coefficients(m), root3)
        try:
            values.append(value.as_rational())
        except NotRational:
            raise NotRational("derivative %d of B is %r" % (m, value))
        scale = scale * step
    return values
