"""
Truncated multivariate power series

A `MultiSeries` is a finite map from exponent vectors to `CycNumber`
coefficients over an ordered list of variable names, truncated at a
total degree `order`. Terms above the order are dropped on
construction, so every operation is exact through the order and
silent above it.

Generating functions are exponential in every variable: the stored
coefficient of x^k is the integral divided by prod(k_i!). The
factorials are folded into the stored value, which keeps the product a
plain Cauchy product; `integral_coefficient` multiplies them back.

"""

from itertools import product as cartesian
from fractions import Fraction

from Hodge.algebra import rational
from Hodge.algebra.cyclotomic import CycNumber, ZERO
from Hodge.utils.errors import (
    DegreeOutOfRange,
    InconsistentSquares,
    NotRational,
    VariableMismatch,
)


def monomials(nvars, order, low=0):
    """
    All exponent vectors in `nvars` variables with total degree between
    `low` and `order`, in lexicographic order.

    """
    return [exps for exps in cartesian(range(order + 1), repeat=nvars) if low <= sum(exps) <= order]


class MultiSeries(object):
    """
    A truncated power series over Q(zeta24).

    Args:
        variables (iterable): Variable names, in exponent-vector order.
        order (int): Total-degree truncation.
        terms (dict, optional): Exponent tuple -> coefficient. Zero
            coefficients and terms above `order` are dropped.

    """

    def __init__(self, variables, order, terms=None):
        self.variables = tuple(variables)
        self.order = order
        self._terms = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise VariableMismatch("exponent %r does not fit variables %r" % (exps, self.variables))
            if sum(exps) <= order:
                coeff = CycNumber.coerce(coeff)
                if coeff:
                    self._terms[exps] = coeff

    @classmethod
    def _raw(cls, variables, order, terms):
        obj = cls.__new__(cls)
        obj.variables, obj.order, obj._terms = variables, order, terms
        return obj

    @classmethod
    def zero(cls, variables, order):
        return cls(variables, order)

    @classmethod
    def variable(cls, name, variables, order):
        """The series consisting of the single variable `name`."""
        variables = tuple(variables)
        exps = tuple(1 if var == name else 0 for var in variables)
        if name not in variables:
            raise VariableMismatch("%r is not one of %r" % (name, variables))
        return cls(variables, order, {exps: 1})

    # access

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """(exponents, coefficient) pairs in lexicographic exponent order."""
        return sorted(self._terms.items())

    def coefficient(self, exponents):
        """
        The stored (EGF-normalised) coefficient of x^exponents.

        Raises:
            DegreeOutOfRange: If the total degree exceeds the order.

        """
        exponents = tuple(exponents)
        if len(exponents) != len(self.variables):
            raise VariableMismatch("exponent %r does not fit variables %r" % (exponents, self.variables))
        if sum(exponents) > self.order:
            raise DegreeOutOfRange("degree %d above order %d" % (sum(exponents), self.order))
        return self._terms.get(exponents, ZERO)

    def integral_coefficient(self, exponents):
        """
        The coefficient times prod(n_i!), as a rational.

        Args:
            exponents (tuple): One exponent per variable.

        Returns:
            value (Fraction): The integral.

        Raises:
            DegreeOutOfRange: If the total degree exceeds the order.
            NotRational: If the coefficient is not rational, which means
                the generating function was transcribed wrongly.

        """
        coeff = self.coefficient(exponents)
        try:
            value = coeff.as_rational()
        except NotRational:
            raise NotRational("coefficient of %r in %r is %r" % (tuple(exponents), self.variables, coeff))
        return value * rational.factorial_product(exponents)

    def truncate(self, order):
        return MultiSeries(self.variables, min(order, self.order), self._terms)

    # arithmetic

    def _check(self, other):
        if not isinstance(other, MultiSeries):
            return False
        if other.variables != self.variables:
            raise VariableMismatch("variables %r and %r differ" % (self.variables, other.variables))
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        order = min(self.order, other.order)
        terms = dict((exps, coeff) for exps, coeff in self._terms.items() if sum(exps) <= order)
        for exps, coeff in other._terms.items():
            if sum(exps) <= order:
                total = terms.get(exps, ZERO) + coeff
                if total:
                    terms[exps] = total
                else:
                    terms.pop(exps, None)
        return MultiSeries._raw(self.variables, order, terms)

    def __neg__(self):
        return MultiSeries._raw(self.variables, self.order,
                                dict((exps, -coeff) for exps, coeff in self._terms.items()))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, factor):
        """Multiply every coefficient by a scalar."""
        factor = CycNumber.coerce(factor)
        if not factor:
            return MultiSeries.zero(self.variables, self.order)
        return MultiSeries._raw(self.variables, self.order,
                                dict((exps, coeff * factor) for exps, coeff in self._terms.items()))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        order = min(self.order, other.order)
        left = sorted(self._terms.items(), key=lambda item: sum(item[0]))
        right = sorted(other._terms.items(), key=lambda item: sum(item[0]))
        terms = {}
        for lexps, lcoeff in left:
            ldeg = sum(lexps)
            if ldeg > order:
                break
            for rexps, rcoeff in right:
                if ldeg + sum(rexps) > order:
                    break
                exps = tuple(a + b for a, b in zip(lexps, rexps))
                terms[exps] = terms.get(exps, ZERO) + lcoeff * rcoeff
        return MultiSeries(self.variables, order, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent):
        result = MultiSeries(self.variables, self.order, {(0,) * len(self.variables): 1})
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self, name):
        """
        Partial derivative by the variable `name`. The order drops by one,
        since the derivative of a degree-N truncation is exact only
        through degree N - 1.

        """
        if name not in self.variables:
            raise VariableMismatch("%r is not one of %r" % (name, self.variables))
        index = self.variables.index(name)
        terms = {}
        for exps, coeff in self._terms.items():
            power = exps[index]
            if power:
                lowered = exps[:index] + (power - 1,) + exps[index + 1:]
                terms[lowered] = coeff * power
        return MultiSeries(self.variables, self.order - 1, terms)

    def derivatives(self, names):
        """Apply `derivative` once per name in `names`."""
        result = self
        for name in names:
            result = result.derivative(name)
        return result

    def substitute(self, mapping, variables, order=None):
        """
        Linear change of variables.

        Args:
            mapping (dict): Old variable name -> linear form, itself a
                dict from new variable name to coefficient. A missing or
                empty form sends the old variable to zero.
            variables (iterable): The new variables.
            order (int, optional): Truncation of the result, at most the
                current order.

        Returns:
            series (MultiSeries): The composed series.

        Raises:
            VariableMismatch: If `mapping` names an unknown old variable
                or a form uses an unknown new variable.

        """
        variables = tuple(variables)
        order = self.order if order is None else min(order, self.order)
        unknown = set(mapping) - set(self.variables)
        if unknown:
            raise VariableMismatch("cannot substitute unknown variables %r" % sorted(unknown))
        forms = []
        for name in self.variables:
            form = dict((var, CycNumber.coerce(value)) for var, value in mapping.get(name, {}).items())
            stray = set(form) - set(variables)
            if stray:
                raise VariableMismatch("form for %r uses unknown variables %r" % (name, sorted(stray)))
            forms.append(dict((var, value) for var, value in form.items() if value))

        if all(len(form) <= 1 for form in forms):
            return self._substitute_monomial(forms, variables, order)

        powers = [[MultiSeries(variables, order, {(0,) * len(variables): 1})] for _ in forms]
        linear = [MultiSeries(variables, order, dict(
            (tuple(1 if var == name else 0 for var in variables), value) for name, value in form.items()))
            for form in forms]
        result = MultiSeries.zero(variables, order)
        for exps, coeff in self.items():
            if sum(exps) > order:
                continue
            term = MultiSeries(variables, order, {(0,) * len(variables): coeff})
            for index, power in enumerate(exps):
                cache = powers[index]
                while len(cache) <= power:
                    cache.append(cache[-1] * linear[index])
                if power:
                    term = term * cache[power]
            result = result + term
        return result

    def _substitute_monomial(self, forms, variables, order):
        # every old variable goes to c * (one new variable) or to zero
        targets = []
        for form in forms:
            if form:
                (name, value), = form.items()
                targets.append((variables.index(name), value))
            else:
                targets.append(None)
        terms = {}
        for exps, coeff in self._terms.items():
            if sum(exps) > order:
                continue
            new = [0] * len(variables)
            value = coeff
            for power, target in zip(exps, targets):
                if not power:
                    continue
                if target is None:
                    value = ZERO
                    break
                index, factor = target
                new[index] += power
                value = value * factor ** power
            if value:
                new = tuple(new)
                terms[new] = terms.get(new, ZERO) + value
        return MultiSeries(variables, order, terms)

    def sqrt(self, constant):
        """
        Square root of a one-variable series.

        Args:
            constant (Fraction or CycNumber): The constant term of the
                root; fixes the branch.

        Returns:
            root (MultiSeries): The unique root with that constant term.

        Raises:
            InconsistentSquares: If `constant` squared is not the
                constant term of the series, or `constant` is zero.
            VariableMismatch: If the series has more than one variable.

        """
        if len(self.variables) != 1:
            raise VariableMismatch("sqrt needs a one-variable series, got %r" % (self.variables,))
        constant = CycNumber.coerce(constant)
        if not constant or constant * constant != self.coefficient((0,)):
            raise InconsistentSquares("%r is not a square root of the constant term %r"
                                      % (constant, self.coefficient((0,))))
        root = [constant]
        half = (constant * 2).inverse()
        for degree in range(1, self.order + 1):
            total = self.coefficient((degree,))
            for low in range(1, degree):
                total = total - root[low] * root[degree - low]
            root.append(total * half)
        return MultiSeries(self.variables, self.order, dict(((degree,), value) for degree, value in enumerate(root)))

    # comparison

    def difference(self, other, order=None):
        """
        Exponent vectors, through `order`, where the two series differ.

        """
        self._check(other)
        order = min(self.order, other.order) if order is None else order
        keys = set(self._terms) | set(other._terms)
        return sorted(exps for exps in keys
                      if sum(exps) <= order and self._terms.get(exps, ZERO) != other._terms.get(exps, ZERO))

    def equal_through(self, other, order=None):
        return not self.difference(other, order)

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (self.variables == other.variables and self.order == other.order
                and self._terms == other._terms)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "<MultiSeries %s order=%d terms=%d>" % (",".join(self.variables), self.order, len(self._terms))
