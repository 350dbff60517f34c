"""
Tests for the exact algebra: Q(zeta24), series and the linear solver.

"""

import random
from fractions import Fraction

from twisted.trial.unittest import SynchronousTestCase

from Hodge.algebra import rational
from Hodge.algebra.cyclotomic import (
    CycNumber,
    I,
    OMEGA,
    OMEGA_BAR,
    ONE,
    SQRT2,
    SQRT3,
    ZERO,
    sqrt_int,
)
from Hodge.algebra.linalg import LinearSystem, solve_square
from Hodge.algebra.series import MultiSeries, monomials
from Hodge.utils.errors import (
    DegreeOutOfRange,
    DivisionByZero,
    InconsistentSquares,
    InconsistentSystem,
    NotRational,
    RankDeficient,
    VariableMismatch,
)


def _random_cyc(rng):
    return CycNumber([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(8)])


class TestRational(SynchronousTestCase):

    def test_to_string(self):
        self.assertEqual(rational.to_string(Fraction(-1, 4)), "-1/4")
        self.assertEqual(rational.to_string(3), "3")

    def test_parse(self):
        self.assertEqual(rational.parse(" 4/3"), Fraction(4, 3))
        self.assertEqual(rational.parse("-2"), Fraction(-2))
        self.assertRaises(ValueError, rational.parse, "0.5")
        self.assertRaises(ValueError, rational.parse, "1/0")
        self.assertRaises(ValueError, rational.parse, "-3/00")

    def test_rational_sqrt(self):
        self.assertEqual(rational.rational_sqrt(Fraction(9, 4)), Fraction(3, 2))
        self.assertIsNone(rational.rational_sqrt(2))
        self.assertIsNone(rational.rational_sqrt(-1))

    def test_multinomial(self):
        self.assertEqual(rational.multinomial((2, 1, 1)), 12)
        self.assertEqual(rational.factorial_product((2, 3)), 12)


class TestCycNumber(SynchronousTestCase):

    def test_constants(self):
        self.assertEqual(SQRT2 * SQRT2, 2)
        self.assertEqual(SQRT3 * SQRT3, 3)
        self.assertEqual(I * I, -1)
        self.assertEqual(OMEGA ** 3, 1)
        self.assertNotEqual(OMEGA, ONE)
        self.assertEqual(OMEGA * OMEGA, OMEGA_BAR)

    def test_arith_examples(self):
        self.assertEqual((1 + I) * (1 - I), 2)
        self.assertEqual(CycNumber.zeta_power(12) * CycNumber.zeta_power(12), 1)
        self.assertEqual(CycNumber.zeta_power(24), ONE)

    def test_inverse_examples(self):
        self.assertEqual(CycNumber.rational(2).inverse(), Fraction(1, 2))
        self.assertEqual(SQRT3.inverse(), SQRT3 * Fraction(1, 3))
        self.assertEqual(OMEGA.inverse(), OMEGA * OMEGA)
        self.assertRaises(DivisionByZero, ZERO.inverse)
        self.assertRaises(ZeroDivisionError, lambda: ONE / ZERO)

    def test_as_rational(self):
        self.assertEqual(CycNumber.rational(Fraction(5, 2)).as_rational(), Fraction(5, 2))
        self.assertRaises(NotRational, SQRT3.as_rational)
        self.assertEqual((SQRT3 * SQRT3 - 3).as_rational(), 0)

    def test_field_axioms_random(self):
        rng = random.Random(24)
        for _ in range(25):
            a, b, c = _random_cyc(rng), _random_cyc(rng), _random_cyc(rng)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a + b, b + a)
            if a:
                self.assertEqual(a * a.inverse(), ONE)

    def test_conjugate(self):
        self.assertEqual(I.conjugate(), -I)
        self.assertEqual(OMEGA.conjugate(), OMEGA_BAR)
        self.assertTrue(SQRT3.is_real())
        self.assertTrue(SQRT2.is_real())
        self.assertFalse(OMEGA.is_real())

    def test_hash_matches_fraction(self):
        self.assertEqual(hash(CycNumber.rational(Fraction(3, 7))), hash(Fraction(3, 7)))

    def test_to_strings(self):
        self.assertEqual(CycNumber.rational(Fraction(-1, 2)).to_strings(), ["-1/2"] + ["0"] * 7)

    def test_sqrt_int(self):
        self.assertEqual(sqrt_int(12), SQRT3 * 2)
        self.assertEqual(sqrt_int(4), 2)
        self.assertEqual(sqrt_int(6) * sqrt_int(6), 6)
        self.assertRaises(NotRational, sqrt_int, 5)


class TestMultiSeries(SynchronousTestCase):

    def test_product_examples(self):
        x = MultiSeries.variable("x", ["x"], 2)
        one = MultiSeries(["x"], 2, {(0,): 1})
        self.assertEqual((one + x) * (one - x), MultiSeries(["x"], 2, {(0,): 1, (2,): -1}))

        xy = MultiSeries(["x", "y"], 3, {(1, 1): 1})
        self.assertEqual(xy * xy, MultiSeries.zero(["x", "y"], 3))

        x3 = MultiSeries.variable("x", ["x"], 3)
        half_square = MultiSeries(["x"], 3, {(2,): Fraction(1, 2)})
        self.assertEqual(x3 * half_square, MultiSeries(["x"], 3, {(3,): Fraction(1, 2)}))

    def test_product_variable_mismatch(self):
        x = MultiSeries.variable("x", ["x"], 3)
        y = MultiSeries.variable("y", ["y"], 3)
        self.assertRaises(VariableMismatch, lambda: x * y)

    def test_product_commutative_associative(self):
        rng = random.Random(7)
        variables = ("a", "b")

        def random_series():
            return MultiSeries(variables, 4, dict((exps, _random_cyc(rng)) for exps in monomials(2, 4)
                                                  if rng.random() < 0.5))

        p, q, r = random_series(), random_series(), random_series()
        self.assertEqual(p * q, q * p)
        self.assertEqual((p * q) * r, p * (q * r))

    def test_substitute_examples(self):
        xyz = MultiSeries(["x1", "x2", "x3"], 3, {(1, 1, 1): 1})
        diagonal = dict((name, {"u": 1}) for name in ("x1", "x2", "x3"))
        self.assertEqual(xyz.substitute(diagonal, ["u"]), MultiSeries(["u"], 3, {(3,): 1}))

        mixed = MultiSeries(["x1", "x2"], 2, {(2, 0): 1, (1, 1): 1})
        self.assertEqual(mixed.substitute({"x1": {"u": 1}, "x2": {}}, ["u"]),
                         MultiSeries(["u"], 2, {(2,): 1}))

        cube = MultiSeries(["x1"], 3, {(3,): 1})
        self.assertEqual(cube.substitute({"x1": {"u": OMEGA}}, ["u"]), MultiSeries(["u"], 3, {(3,): 1}))

    def test_substitute_general_forms(self):
        square = MultiSeries(["x"], 2, {(2,): 1})
        result = square.substitute({"x": {"u": 1, "v": 1}}, ["u", "v"])
        self.assertEqual(result, MultiSeries(["u", "v"], 2, {(2, 0): 1, (1, 1): 2, (0, 2): 1}))

    def test_substitute_mismatch(self):
        x = MultiSeries.variable("x", ["x"], 3)
        self.assertRaises(VariableMismatch, x.substitute, {"y": {"u": 1}}, ["u"])
        self.assertRaises(VariableMismatch, x.substitute, {"x": {"w": 1}}, ["u"])

    def test_integral_coefficient(self):
        series = MultiSeries(["x", "y"], 4, {(2, 1): Fraction(1, 8), (1, 0): SQRT3})
        self.assertEqual(series.integral_coefficient((2, 1)), Fraction(1, 4))
        self.assertEqual(series.integral_coefficient((0, 0)), 0)
        self.assertRaises(NotRational, series.integral_coefficient, (1, 0))
        self.assertRaises(DegreeOutOfRange, series.integral_coefficient, (3, 2))

    def test_truncation_on_construction(self):
        series = MultiSeries(["x"], 2, {(3,): 1, (1,): 0})
        self.assertEqual(series.terms, {})

    def test_derivative(self):
        series = MultiSeries(["x", "y"], 4, {(3, 1): 2, (0, 2): 1})
        self.assertEqual(series.derivative("x"), MultiSeries(["x", "y"], 3, {(2, 1): 6}))
        self.assertEqual(series.derivatives(["y", "y"]).coefficient((0, 0)), 2)

    def test_sqrt(self):
        base = MultiSeries(["u"], 4, {(0,): 4, (1,): 4, (2,): 1})
        root = base.sqrt(2)
        self.assertEqual(root, MultiSeries(["u"], 4, {(0,): 2, (1,): 1}))
        self.assertEqual(base.sqrt(-2), -root)
        self.assertRaises(InconsistentSquares, base.sqrt, 3)


class TestLinearSystem(SynchronousTestCase):

    def test_solve(self):
        system = LinearSystem(["a", "b"])
        self.assertTrue(system.add_equation({"a": 1, "b": 1}, 3))
        self.assertTrue(system.add_equation({"a": 1, "b": -1}, Fraction(1, 2)))
        self.assertFalse(system.add_equation({"a": 2, "b": 2}, 6))
        self.assertEqual(system.rank, 2)
        self.assertEqual(system.solve(), {"a": Fraction(7, 4), "b": Fraction(5, 4)})

    def test_inconsistent(self):
        system = LinearSystem(["a"])
        system.add_equation({"a": 2}, 1)
        self.assertRaises(InconsistentSystem, system.add_equation, {"a": 4}, 1)

    def test_rank_deficient(self):
        system = LinearSystem(["a", "b"])
        system.add_equation({"a": 1, "b": 1}, 1)
        self.assertEqual(system.free_unknowns(), ["b"])
        self.assertRaises(RankDeficient, system.solve)

    def test_solve_square(self):
        self.assertEqual(solve_square([[2, 1], [1, 3]], [3, 5]), [Fraction(4, 5), Fraction(7, 5)])
