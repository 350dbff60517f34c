"""
Exact linear algebra

`LinearSystem` collects equations one at a time and keeps them in
echelon form with integer rows (fraction-free elimination). Pivots are
taken at the lowest unknown index first, so the elimination order and
therefore the logged ranks are reproducible. Over-determined systems
are the normal case: a redundant equation reduces to zero, and an
inconsistent one raises at the moment it is added.

"""

from fractions import Fraction
from functools import reduce
from math import gcd

from Hodge.algebra.rational import lcm
from Hodge.utils.errors import InconsistentSystem, RankDeficient


def _primitive(row, rhs):
    """Divide an integer row and its right-hand side by their content."""
    content = reduce(gcd, row.values(), abs(rhs))
    if content > 1:
        row = {col: value // content for col, value in row.items()}
        rhs //= content
    return row, rhs


class LinearSystem(object):
    """
    An exact linear system over the rationals in a fixed set of
    unknowns.

    Args:
        unknowns (iterable): Hashable keys naming the unknowns. Their
            order is the pivot order.

    """

    def __init__(self, unknowns):
        self.unknowns = list(unknowns)
        self._index = dict((key, col) for col, key in enumerate(self.unknowns))
        self._pivots = {}
        self.equations = 0

    @property
    def rank(self):
        return len(self._pivots)

    def add_equation(self, coeffs, rhs=0):
        """
        Add the equation sum(coeffs[key] * key) = rhs.

        Args:
            coeffs (dict): Unknown key -> rational coefficient.
            rhs (Fraction, optional): Right-hand side.

        Returns:
            independent (bool): False if the equation was implied by the
                ones already added.

        Raises:
            InconsistentSystem: If the equation contradicts earlier ones.
            KeyError: If a key is not one of the unknowns.

        """
        self.equations += 1
        fractional = {}
        for key, value in coeffs.items():
            value = Fraction(value)
            if value:
                col = self._index[key]
                fractional[col] = fractional.get(col, 0) + value
        fractional = dict((col, value) for col, value in fractional.items() if value)
        rhs = Fraction(rhs)
        scale = lcm(rhs.denominator, *[value.denominator for value in fractional.values()])
        row = dict((col, int(value * scale)) for col, value in fractional.items())
        constant = int(rhs * scale)

        while row:
            lead = min(row)
            pivot = self._pivots.get(lead)
            if pivot is None:
                break
            prow, prhs = pivot
            common = gcd(row[lead], prow[lead])
            own, other = prow[lead] // common, row[lead] // common
            reduced = dict((col, own * value) for col, value in row.items())
            for col, value in prow.items():
                reduced[col] = reduced.get(col, 0) - other * value
            row = dict((col, value) for col, value in reduced.items() if value)
            constant = own * constant - other * prhs
            row, constant = _primitive(row, constant)

        if not row:
            if constant:
                raise InconsistentSystem("equation %d contradicts the system" % self.equations)
            return False
        row, constant = _primitive(row, constant)
        self._pivots[min(row)] = (row, constant)
        return True

    def free_unknowns(self):
        """Unknowns that no pivot determines yet."""
        return [key for col, key in enumerate(self.unknowns) if col not in self._pivots]

    def solve(self):
        """
        Back-substitute.

        Returns:
            solution (dict): Unknown key -> Fraction.

        Raises:
            RankDeficient: If some unknown is not determined.

        """
        free = self.free_unknowns()
        if free:
            raise RankDeficient("%d of %d unknowns undetermined, first %r"
                                % (len(free), len(self.unknowns), free[0]))
        values = {}
        for col in sorted(self._pivots, reverse=True):
            row, constant = self._pivots[col]
            total = Fraction(constant)
            for other, coeff in row.items():
                if other != col:
                    total -= coeff * values[other]
            values[col] = total / row[col]
        return dict((self.unknowns[col], value) for col, value in values.items())


def solve_square(matrix, rhs):
    """
    Solve a square system given as a list of rows.

    Args:
        matrix (list): Rows of rationals.
        rhs (list): Right-hand side.

    Returns:
        solution (list): The unique solution.

    Raises:
        RankDeficient: If the matrix is singular.

    """
    size = len(matrix)
    system = LinearSystem(range(size))
    for row, value in zip(matrix, rhs):
        system.add_equation(dict((col, entry) for col, entry in enumerate(row) if entry), value)
    solution = system.solve()
    return [solution[col] for col in range(size)]
