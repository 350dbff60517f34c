"""
The h-series

h is the one-variable series with h'''(u) = (1/2) tan(-u/2). Only its
Taylor coefficients of degree three and up are defined; every
generating function in Hodge is a sum of terms

    weight * h(theta * pi + l(x))

with a rational phase theta and a linear form l over the potential's
variables. Expanding such a term needs only the derivatives
h^(n)(theta * pi), which are values of the tangent polynomials at
tan(-theta * pi / 2).

A term whose linear form vanishes is constant in x and so contributes
nothing in degrees >= 3; it is never evaluated, which also keeps the
poles of h''' at odd multiples of pi out of the way.

"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from Hodge.algebra.cyclotomic import CycNumber
from Hodge.algebra.series import MultiSeries
from Hodge.kernel.tangent import evaluate, tan_at, tan_derivative_coefficients
from Hodge.utils.errors import DegreeOutOfRange, UnsupportedAngle, VariableMismatch


class Phase(object):
    """
    A point theta * pi of expansion. theta is kept exactly and compared
    modulo 2, since the derivatives of h are 2 pi periodic.

    Args:
        theta (Fraction): The phase in units of pi.

    Raises:
        UnsupportedAngle: If theta is not a multiple of 1/6, where tan(-theta * pi / 2)
            leaves Q(zeta24).

    """
    __slots__ = ("theta",)

    def __init__(self, theta):
        theta = Fraction(theta)
        if 6 % theta.denominator:
            raise UnsupportedAngle("phase %s pi is not a multiple of pi/6" % theta)
        self.theta = theta

    @property
    def reduced(self):
        """theta modulo 2, in the window (-1, 1]."""
        theta = self.theta % 2
        return theta - 2 if theta > 1 else theta

    def __add__(self, other):
        if isinstance(other, Phase):
            other = other.theta
        return Phase(self.theta + Fraction(other))

    def __neg__(self):
        return Phase(-self.theta)

    def __eq__(self, other):
        if not isinstance(other, Phase):
            return NotImplemented
        return self.reduced == other.reduced

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.reduced)

    def __repr__(self):
        return "Phase(%s)" % self.theta


class HTerm(object):
    """
    One summand weight * h(phase + linear_form(x)).

    Args:
        phase (Phase or Fraction): Point of expansion, in units of pi.
        linear_form (dict): Variable name -> coefficient.
        weight (Fraction, optional): Multiplier.

    """
    __slots__ = ("phase", "linear_form", "weight")

    def __init__(self, phase, linear_form, weight=1):
        self.phase = phase if isinstance(phase, Phase) else Phase(phase)
        self.linear_form = dict((name, CycNumber.coerce(value))
                                for name, value in linear_form.items() if value)
        self.weight = Fraction(weight)

    def is_constant(self):
        return not self.linear_form

    def __repr__(self):
        form = " + ".join("%r*%s" % (value, name) for name, value in sorted(self.linear_form.items()))
        return "HTerm(%s * h(%s pi + %s))" % (self.weight, self.phase.theta, form or "0")


@lru_cache(maxsize=None)
def _h_derivative(n, theta):
    tangent = tan_at(-theta / 2)
    return evaluate(tan_derivative_coefficients(n - 3), tangent) * (Fraction(1, 2) * Fraction(-1, 2) ** (n - 3))


def h_derivative_at(n, phase):
    """
    h^(n)(theta * pi) = (1/2) (-1/2)^(n-3) P_(n-3)(tan(-theta * pi / 2)).

    Args:
        n (int): Derivative order, at least 3.
        phase (Phase or Fraction): The point.

    Returns:
        value (CycNumber): The derivative.

    Raises:
        DegreeOutOfRange: If n < 3, where h is undefined.
        PoleError: If theta is an odd integer.

    """
    if n < 3:
        raise DegreeOutOfRange("h^(%d) is undefined below degree 3" % n)
    if not isinstance(phase, Phase):
        phase = Phase(phase)
    return _h_derivative(n, phase.reduced)


def _support_monomials(size, order):
    # exponent vectors over the support variables, degree 3..order
    if size == 0:
        return
    stack = [((), 0)]
    while stack:
        exps, degree = stack.pop()
        if len(exps) == size:
            if degree >= 3:
                yield exps
            continue
        for power in range(order - degree + 1):
            stack.append((exps + (power,), degree + power))


def expand_h_term(term, variables, order):
    """
    Taylor expansion of one h-term through total degree `order`:

        weight * sum_{n=3}^{order} h^(n)(theta pi) l(x)^n / n!

    Args:
        term (HTerm): The summand.
        variables (iterable): Variables of the resulting series.
        order (int): Truncation, at least 3.

    Returns:
        series (MultiSeries): The expansion; the zero series when the
            linear form vanishes.

    Raises:
        VariableMismatch: If the linear form uses an unknown variable.
        PoleError: If a needed derivative sits on a pole of h'''.

    """
    variables = tuple(variables)
    if order < 3:
        raise DegreeOutOfRange("h-terms start in degree 3, order %d is too small" % order)
    stray = set(term.linear_form) - set(variables)
    if stray:
        raise VariableMismatch("linear form uses %r outside %r" % (sorted(stray), variables))
    if term.is_constant() or not term.weight:
        return MultiSeries.zero(variables, order)

    support = [name for name in variables if name in term.linear_form]
    indices = [variables.index(name) for name in support]
    powers = []
    for name in support:
        value, column = CycNumber.coerce(1), []
        for power in range(order + 1):
            column.append(value * Fraction(1, factorial(power)))
            value = value * term.linear_form[name]
        powers.append(column)
    derivatives = dict((n, h_derivative_at(n, term.phase) * term.weight) for n in range(3, order + 1))

    terms = {}
    for exps in _support_monomials(len(support), order):
        coeff = derivatives[sum(exps)]
        for column, power in zip(powers, exps):
            coeff = coeff * column[power]
        full = [0] * len(variables)
        for index, power in zip(indices, exps):
            full[index] = power
        terms[tuple(full)] = coeff
    return MultiSeries(variables, order, terms)


def expand_h_terms(terms, variables, order):
    """Sum of `expand_h_term` over an iterable of HTerms."""
    result = MultiSeries.zero(variables, order)
    for term in terms:
        result = result + expand_h_term(term, variables, order)
    return result
