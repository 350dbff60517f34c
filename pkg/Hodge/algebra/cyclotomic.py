"""
The cyclotomic field Q(zeta24)

An element is a polynomial of degree < 8 in zeta = exp(2 pi i / 24),
reduced modulo the cyclotomic polynomial

    Phi24(x) = x^8 - x^4 + 1,

so two elements are equal exactly when their coordinates are. The field
holds every constant the generating functions need: i = zeta^6,
omega = zeta^8, sqrt3 = zeta^2 + zeta^-2, sqrt2 = zeta^3 + zeta^-3 and
tan of every multiple of pi/12 that is not a pole.

Coordinates are kept as eight integers over one positive common
denominator, normalised so that the gcd of all nine numbers is 1. This
makes products cheap (integer convolution, then one gcd) and keeps the
representation canonical. `coeffs` exposes the coordinates as Fractions.

"""

from fractions import Fraction
from functools import reduce
from math import gcd

from Hodge.algebra import rational
from Hodge.algebra.linalg import solve_square
from Hodge.utils.errors import DivisionByZero, NotRational

CONDUCTOR = 24
DEGREE = 8


def _reduce(poly):
    """Reduce an integer coefficient list modulo Phi24, in place."""
    # zeta^k = zeta^(k-4) - zeta^(k-8) for k >= 8
    for power in range(len(poly) - 1, DEGREE - 1, -1):
        coeff = poly[power]
        if coeff:
            poly[power - 4] += coeff
            poly[power - 8] -= coeff
    return poly[:DEGREE] + [0] * (DEGREE - len(poly))


def _normalise(num, den):
    if den < 0:
        num, den = [-value for value in num], -den
    content = reduce(gcd, num, den)
    if content != 1:
        num, den = [value // content for value in num], den // content
    if not any(num):
        den = 1
    return tuple(num), den


class CycNumber(object):
    """
    An element of Q(zeta24).

    Args:
        coeffs (iterable, optional): Up to eight rationals, the
            coordinates at zeta^0 .. zeta^7. Missing ones are zero.

    """
    __slots__ = ("_num", "_den")

    def __init__(self, coeffs=()):
        coeffs = [Fraction(value) for value in coeffs]
        if len(coeffs) > DEGREE:
            raise ValueError("at most %d coordinates" % DEGREE)
        coeffs += [Fraction(0)] * (DEGREE - len(coeffs))
        den = rational.lcm(*[value.denominator for value in coeffs])
        self._num, self._den = _normalise([int(value * den) for value in coeffs], den)

    @classmethod
    def _make(cls, num, den):
        obj = cls.__new__(cls)
        obj._num, obj._den = _normalise(num, den)
        return obj

    @classmethod
    def rational(cls, value):
        """Embed a rational."""
        value = Fraction(value)
        return cls._make([value.numerator] + [0] * (DEGREE - 1), value.denominator)

    @classmethod
    def zeta_power(cls, power):
        """zeta^power for any integer power."""
        power %= CONDUCTOR
        poly = [0] * (power + 1)
        poly[power] = 1
        return cls._make(_reduce(poly), 1)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, CycNumber):
            return value
        return cls.rational(value)

    # coordinates

    @property
    def coeffs(self):
        return tuple(Fraction(value, self._den) for value in self._num)

    def is_rational(self):
        return not any(self._num[1:])

    def as_rational(self):
        """
        Return the value as a Fraction.

        Raises:
            NotRational: If the value is not in Q.

        """
        if not self.is_rational():
            raise NotRational("%r is not rational" % (self,))
        return Fraction(self._num[0], self._den)

    def to_strings(self):
        """The eight coordinates in the "p/q" text format."""
        return [rational.to_string(value) for value in self.coeffs]

    # arithmetic

    def __add__(self, other):
        other = self._operand(other)
        if other is NotImplemented:
            return other
        den = self._den * other._den // gcd(self._den, other._den)
        left, right = den // self._den, den // other._den
        return CycNumber._make([left * a + right * b for a, b in zip(self._num, other._num)], den)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._make([-value for value in self._num], self._den)

    def __sub__(self, other):
        other = self._operand(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._operand(other)
        if other is NotImplemented:
            return other
        if other.is_rational():
            return self._scale(other._num[0], other._den)
        if self.is_rational():
            return other._scale(self._num[0], self._den)
        poly = [0] * (2 * DEGREE - 1)
        for i, a in enumerate(self._num):
            if a:
                for j, b in enumerate(other._num):
                    if b:
                        poly[i + j] += a * b
        return CycNumber._make(_reduce(poly), self._den * other._den)

    __rmul__ = __mul__

    def _scale(self, num, den):
        return CycNumber._make([num * value for value in self._num], den * self._den)

    def inverse(self):
        """
        The multiplicative inverse, by solving the 8x8 rational system
        for multiplication by `self`.

        Raises:
            DivisionByZero: If `self` is zero.

        """
        if not any(self._num):
            raise DivisionByZero("zero has no inverse in Q(zeta24)")
        if self.is_rational():
            return CycNumber.rational(Fraction(self._den, self._num[0]))
        numerator = CycNumber._make(list(self._num), 1)
        columns = [(numerator * CycNumber.zeta_power(power))._coords() for power in range(DEGREE)]
        matrix = [[columns[col][row] for col in range(DEGREE)] for row in range(DEGREE)]
        solution = solve_square(matrix, [1] + [0] * (DEGREE - 1))
        return CycNumber(solution)._scale(self._den, 1)

    def _coords(self):
        return [Fraction(value, self._den) for value in self._num]

    def __truediv__(self, other):
        other = self._operand(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycNumber.coerce(other) * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def conjugate(self):
        """Complex conjugation, zeta -> zeta^-1."""
        result = ZERO
        for power, value in enumerate(self._num):
            if value:
                result = result + CycNumber.zeta_power(-power) * value
        return result * Fraction(1, self._den)

    def is_real(self):
        return self.conjugate() == self

    @staticmethod
    def _operand(value):
        if isinstance(value, CycNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return CycNumber.rational(value)
        return NotImplemented

    # comparison

    def __eq__(self, other):
        other = self._operand(other)
        if other is NotImplemented:
            return other
        return self._num == other._num and self._den == other._den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self._num, self._den))

    def __bool__(self):
        return any(self._num)

    __nonzero__ = __bool__

    def __repr__(self):
        terms = []
        for power, value in enumerate(self.coeffs):
            if value:
                terms.append(rational.to_string(value) + ("" if power == 0 else "*z^%d" % power))
        return "CycNumber(%s)" % (" + ".join(terms) or "0")


def sqrt_int(value):
    """
    Square root of a positive integer whose square-free part divides 6.

    Args:
        value (int): The radicand.

    Returns:
        root (CycNumber): The positive square root.

    Raises:
        NotRational: If the square-free part of `value` is not 1, 2, 3 or 6.

    """
    square = 1
    factor = 2
    rest = value
    while factor * factor <= rest:
        while rest % (factor * factor) == 0:
            rest //= factor * factor
            square *= factor
        factor += 1
    surds = {1: ONE, 2: SQRT2, 3: SQRT3, 6: SQRT2 * SQRT3}
    if rest not in surds:
        raise NotRational("sqrt(%d) is not in Q(zeta24)" % value)
    return surds[rest] * square


ZERO = CycNumber()
ONE = CycNumber.rational(1)
I = CycNumber.zeta_power(6)
OMEGA = CycNumber.zeta_power(8)
OMEGA_BAR = CycNumber.zeta_power(16)
SQRT3 = CycNumber.zeta_power(2) + CycNumber.zeta_power(-2)
SQRT2 = CycNumber.zeta_power(3) + CycNumber.zeta_power(-3)
