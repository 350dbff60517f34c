"""
Tests for the tangent data and the h-series expansions.

"""

from fractions import Fraction

from sympy import Poly, QQ, symbols
from twisted.trial.unittest import SynchronousTestCase

from Hodge.algebra.cyclotomic import SQRT3
from Hodge.algebra.series import MultiSeries
from Hodge.kernel import hseries, tangent
from Hodge.kernel.hseries import HTerm, Phase
from Hodge.utils.errors import DegreeOutOfRange, PoleError, UnsupportedAngle, VariableMismatch

_T = symbols("t")


class TestTangent(SynchronousTestCase):

    def test_tan_derivative_polynomial(self):
        self.assertEqual(tangent.tan_derivative_polynomial(0), Poly(_T, _T, domain=QQ))
        self.assertEqual(tangent.tan_derivative_polynomial(1), Poly(1 + _T ** 2, _T, domain=QQ))
        self.assertEqual(tangent.tan_derivative_polynomial(2), Poly(2 * _T + 2 * _T ** 3, _T, domain=QQ))
        self.assertEqual(tangent.tan_derivative_coefficients(2), (0, 2, 0, 2))

    def test_tan_at(self):
        self.assertEqual(tangent.tan_at(Fraction(1, 4)), 1)
        self.assertEqual(tangent.tan_at(Fraction(1, 6)), SQRT3 * Fraction(1, 3))
        self.assertEqual(tangent.tan_at(Fraction(1, 3)), SQRT3)
        self.assertEqual(tangent.tan_at(Fraction(-1, 4)), -1)
        self.assertEqual(tangent.tan_at(0), 0)

    def test_tan_at_errors(self):
        self.assertRaises(PoleError, tangent.tan_at, Fraction(1, 2))
        self.assertRaises(PoleError, tangent.tan_at, Fraction(-3, 2))
        self.assertRaises(UnsupportedAngle, tangent.tan_at, Fraction(1, 5))

    def test_tan_at_is_real(self):
        for twelfths in range(-11, 12):
            if twelfths % 6:
                self.assertTrue(tangent.tan_at(Fraction(twelfths, 12)).is_real())

    def test_tangent_maclaurin(self):
        self.assertEqual(tangent.tangent_maclaurin(5),
                         [0, 1, 0, Fraction(1, 3), 0, Fraction(2, 15)])

    def test_fp_tangent_series(self):
        values = tangent.fp_tangent_series(8)
        self.assertEqual(values[4], Fraction(-1, 4))
        self.assertEqual(values[6], Fraction(-1, 8))
        self.assertEqual(values[8], Fraction(-1, 4))
        self.assertEqual(values[5], 0)
        self.assertEqual(values[3], 0)

    def test_b_series(self):
        values = tangent.b_series(6)
        self.assertEqual(len(values), 7)
        self.assertEqual(values[0], 1)
        self.assertEqual(values[1], Fraction(-2, 3))
        for value in values:
            self.assertIsInstance(value, Fraction)


class TestHDerivative(SynchronousTestCase):

    def test_examples(self):
        self.assertEqual(hseries.h_derivative_at(3, 0), 0)
        self.assertEqual(hseries.h_derivative_at(3, Fraction(-1, 2)), Fraction(1, 2))
        self.assertEqual(hseries.h_derivative_at(4, Fraction(-1, 2)), Fraction(-1, 2))
        self.assertEqual(hseries.h_derivative_at(4, 0), Fraction(-1, 4))

    def test_degree_too_low(self):
        self.assertRaises(DegreeOutOfRange, hseries.h_derivative_at, 2, 0)

    def test_pole(self):
        self.assertRaises(PoleError, hseries.h_derivative_at, 3, 1)

    def test_oddness(self):
        for theta in (Fraction(1, 6), Fraction(-1, 2), Fraction(2, 3), Fraction(5, 6)):
            for n in range(3, 9):
                self.assertEqual(hseries.h_derivative_at(n, -theta),
                                 hseries.h_derivative_at(n, theta) * (-1) ** n)

    def test_periodicity(self):
        for theta in (Fraction(-5, 6), Fraction(1, 3), Fraction(1, 2)):
            for n in range(3, 8):
                self.assertEqual(hseries.h_derivative_at(n, theta + 2), hseries.h_derivative_at(n, theta))

    def test_phase(self):
        self.assertEqual(Phase(Fraction(3, 2)).reduced, Fraction(-1, 2))
        self.assertEqual(Phase(-1).reduced, 1)
        self.assertEqual(Phase(Fraction(5, 2)), Phase(Fraction(1, 2)))
        self.assertRaises(UnsupportedAngle, Phase, Fraction(1, 7))

    def test_phase_rejects_what_h_cannot_evaluate(self):
        # tan(-pi/24) is not in Q(zeta24), so 1/12 fails at construction
        self.assertRaises(UnsupportedAngle, Phase, Fraction(1, 12))
        self.assertRaises(UnsupportedAngle, HTerm, Fraction(-5, 12), {"u": 1})
        self.assertRaises(UnsupportedAngle, lambda: Phase(Fraction(1, 6)) + Fraction(1, 4))
        for theta in (Fraction(-5, 6), Fraction(-1, 3), Fraction(1, 6), Fraction(3, 2)):
            hseries.h_derivative_at(4, Phase(theta))


class TestExpandHTerm(SynchronousTestCase):

    def test_constant_term_is_zero(self):
        series = hseries.expand_h_term(HTerm(1, {}), ["x1"], 6)
        self.assertEqual(series, MultiSeries.zero(["x1"], 6))

    def test_single_variable(self):
        series = hseries.expand_h_term(HTerm(0, {"x1": 1}, Fraction(1, 2)), ["x1", "x2"], 4)
        self.assertEqual(series.coefficient((4, 0)), Fraction(-1, 192))
        self.assertEqual(series.coefficient((3, 0)), 0)

    def test_multinomial_expansion(self):
        form = {"x1": Fraction(1, 2), "x2": Fraction(1, 2), "x3": Fraction(1, 2)}
        series = hseries.expand_h_term(HTerm(Fraction(-1, 2), form), ["x1", "x2", "x3"], 3)
        self.assertEqual(series.coefficient((1, 1, 1)), Fraction(1, 16))

    def test_unknown_variable(self):
        self.assertRaises(VariableMismatch, hseries.expand_h_term, HTerm(0, {"y": 1}), ["x"], 4)

    def test_trig_identity_triple(self):
        order = 12
        for shift in (0, Fraction(-1, 6)):
            lhs = hseries.expand_h_term(HTerm(3 * shift, {"u": 3}, Fraction(1, 9)), ["u"], order)
            rhs = hseries.expand_h_terms([HTerm(Phase(shift) + Fraction(offset, 3), {"u": 1})
                                          for offset in (0, 2, -2)], ["u"], order)
            self.assertEqual(lhs, rhs)

    def test_trig_identity_double(self):
        order = 12
        lhs = hseries.expand_h_term(HTerm(0, {"u": 2}, Fraction(1, 4)), ["u"], order)
        rhs = hseries.expand_h_terms([HTerm(Fraction(1, 2), {"u": 1}), HTerm(Fraction(-1, 2), {"u": 1})],
                                     ["u"], order)
        self.assertEqual(lhs, rhs)
