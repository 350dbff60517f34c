"""
Tests for the prototype formulas, the builders and the integral tables.

"""

from fractions import Fraction

import mock
from twisted.trial.unittest import SynchronousTestCase

from Hodge.algebra.cyclotomic import OMEGA, SQRT2, SQRT3
from Hodge.algebra.series import MultiSeries
from Hodge.kernel.hseries import HTerm, expand_h_terms
from Hodge.potentials import builders, prototypes, table
from Hodge.utils.errors import MonodromyViolation, NotRational, OrientationMismatch, UnsupportedGroup

ORDER = 6
DIAGONAL = {"x1": {"u": 1}, "x2": {"u": 1}, "x3": {"u": 1}}


def _z2z2(order=ORDER):
    return table.extract_table(builders.build_explicit("Z2xZ2", order), "Z2xZ2", ("z1", "z2", "z3"))


def _a4(order=ORDER):
    return table.extract_table(builders.build_explicit("A4", order), "A4", ("s1", "s2", "zeta"))


class TestPrototypes(SynchronousTestCase):

    def test_proto_lookup(self):
        self.assertIs(prototypes.proto("EXPLICIT_A4"), prototypes.EXPLICIT_A4)

    def test_z2z2_summands(self):
        terms = builders.proto_terms(prototypes.EXPLICIT_Z2Z2["terms"])
        self.assertEqual(len(terms), 7)
        for term in terms[:4]:
            self.assertEqual((term.weight, term.phase.theta), (1, Fraction(-1, 2)))
            self.assertEqual(sorted(abs(value.as_rational()) for value in term.linear_form.values()),
                             [Fraction(1, 2)] * 3)
        signs = [tuple(term.linear_form[name].as_rational() > 0 for name in ("x1", "x2", "x3"))
                 for term in terms[:4]]
        self.assertEqual(signs, [(True, True, True), (False, True, False),
                                 (True, False, False), (False, False, True)])
        for term in terms[4:]:
            self.assertEqual((term.weight, term.phase.theta), (Fraction(1, 2), 0))

    def test_a4_summands(self):
        terms = builders.proto_terms(prototypes.EXPLICIT_A4["terms"])
        self.assertEqual(len(terms), 11)
        self.assertEqual(sorted(term.weight for term in terms),
                         [Fraction(1, 2)] + [1] * 6 + [2] * 3 + [4])
        self.assertEqual(terms[3].linear_form["x1"], OMEGA * SQRT3 * Fraction(1, 3))
        self.assertEqual(terms[3].linear_form["x3"], Fraction(1, 2))
        self.assertEqual(terms[5].linear_form["x3"], Fraction(-1, 2))
        self.assertEqual([term.phase.theta for term in terms[:3]],
                         [Fraction(-5, 6), Fraction(-1, 3), Fraction(1, 6)])
        self.assertEqual(terms[9].phase.theta, Fraction(1, 2))

    def test_kernel_summands(self):
        terms = builders.proto_terms(prototypes.KERNEL_FS4["terms"])
        self.assertEqual([term.weight for term in terms], [1, 2, 1, 2, Fraction(2, 3)])
        self.assertEqual([term.phase.theta for term in terms],
                         [Fraction(-5, 6), Fraction(-1, 3), Fraction(1, 6), Fraction(1, 2), Fraction(3, 2)])
        self.assertEqual(terms[3].linear_form, {"v": Fraction(1, 2)})

    def test_section_composition(self):
        terms = builders.composed_terms(prototypes.SECTION_S4)
        self.assertEqual(len(terms), 10)
        self.assertEqual(terms[0].weight, Fraction(1, 2))
        self.assertEqual(terms[0].linear_form["u"], SQRT3 * Fraction(2, 3))
        self.assertEqual(terms[5].linear_form["u"], -SQRT3 * Fraction(1, 3))

    def test_parse_coefficient(self):
        self.assertEqual(builders.parse_coefficient("-1/2"), Fraction(-1, 2))
        self.assertEqual(builders.parse_coefficient(("2", "omega omegabar")), 2)


class TestExplicit(SynchronousTestCase):

    def test_z2z2_values(self):
        values = _z2z2()
        self.assertEqual(values[(1, 1, 1)], Fraction(1, 4))
        self.assertEqual(values[(2, 2, 0)], Fraction(-1, 8))
        self.assertEqual(values[(4, 0, 0)], Fraction(-1, 4))
        self.assertEqual(values[(6, 0, 0)], Fraction(-1, 8))
        self.assertEqual(values[(2, 1, 0)], 0)
        self.assertEqual(values[(3, 1, 0)], 0)

    def test_a4_values(self):
        values = _a4()
        self.assertEqual(values[(3, 0, 0)], Fraction(4, 3))
        self.assertEqual(values[(1, 1, 1)], 1)
        self.assertEqual(values[(0, 0, 3)], Fraction(1, 2))
        self.assertEqual(values[(2, 0, 1)], 0)

    def test_a4_symmetric(self):
        values = _a4()
        for (a1, a2, b), value in values.items():
            self.assertEqual(values[(a2, a1, b)], value)

    def test_vanishing(self):
        for values in (_z2z2(), _a4()):
            for exps, value in values.items():
                if values.vanishes(exps):
                    self.assertEqual(value, 0)

    def test_truncation_consistency(self):
        low, high = builders.build_explicit("A4", ORDER), builders.build_explicit("A4", ORDER + 2)
        self.assertTrue(low.equal_through(high, ORDER))

    def test_s4_has_no_explicit_formula(self):
        self.assertRaises(UnsupportedGroup, builders.build_explicit, "S4", ORDER)

    def test_dropped_summands_are_irrational(self):
        terms = builders.proto_terms(prototypes.EXPLICIT_A4["terms"])[:6]
        series = expand_h_terms(terms, ("x1", "x2", "x3"), 3)
        self.assertRaises(NotRational, table.extract_table, series, "A4", ("s1", "s2", "zeta"))


class TestTheorem1(SynchronousTestCase):

    def test_z2z2(self):
        self.assertEqual(builders.build_theorem1("Z2xZ2", ORDER), builders.build_explicit("Z2xZ2", ORDER))

    def test_a4(self):
        self.assertEqual(builders.build_theorem1("A4", ORDER), builders.build_explicit("A4", ORDER))

    def test_orientation(self):
        report = builders.resolve_orientation(5)
        self.assertTrue(report["plain"])
        self.assertEqual(report["kept"], "plain")

    def test_orientation_mismatch(self):
        wrong = MultiSeries.zero(("x1", "x2", "x3"), 5)
        with mock.patch("Hodge.potentials.builders.build_theorem1", return_value=wrong):
            self.assertRaises(OrientationMismatch, builders.resolve_orientation, 5)

    def test_black_roots_are_constant(self):
        terms = builders.theorem1_terms("Z2xZ2")
        self.assertEqual(len(terms), 12)
        self.assertEqual(sum(1 for term in terms if term.is_constant()), 1)
        self.assertEqual(len(builders.theorem1_terms("A4")), 36)

    def test_phases(self):
        terms = builders.theorem1_terms("Z2xZ2")
        # the outer simple root: theta = 1 + 2/4
        self.assertEqual(terms[1].phase.reduced, Fraction(-1, 2))

    def test_s4_unsupported(self):
        self.assertRaises(UnsupportedGroup, builders.theorem1_terms, "S4")


class TestSection(SynchronousTestCase):

    def test_values(self):
        values = table.extract_table(builders.build_s4_section(ORDER), "S4", ("sigma", "zeta"))
        self.assertEqual(values[(2, 1)], 1)
        self.assertEqual(values[(3, 0)], Fraction(4, 3))
        self.assertEqual(values[(1, 2)], 0)
        self.assertEqual(values[(0, 3)], Fraction(1, 4))

    def test_section_is_half_a4(self):
        self.assertTrue(builders.specialize_s4_from_a4(ORDER).equal_through(builders.build_s4_section(ORDER)))

    def test_sigma_line(self):
        section = builders.build_s4_section(ORDER)
        line = builders.specialize(section, {"u": {"x": 1}}, ("x",))
        self.assertEqual(line, builders.build_fs4_closed(ORDER))
        self.assertEqual(line.integral_coefficient((3,)), Fraction(4, 3))

    def test_zeta_line(self):
        section = builders.build_s4_section(ORDER)
        self.assertEqual(builders.specialize(section, {"v": {"u": 1}}, ("u",)), builders.x0_series(ORDER))


class TestSpecialize(SynchronousTestCase):

    def test_a4_zeta_line(self):
        a4 = builders.build_explicit("A4", ORDER)
        z2z2 = builders.build_explicit("Z2xZ2", ORDER)
        lhs = builders.specialize(a4, {"x3": {"u": 1}}, ("u",)).scale(3)
        self.assertEqual(lhs, builders.specialize(z2z2, DIAGONAL, ("u",)))

    def test_a4_sigma_diagonal(self):
        a4 = builders.build_explicit("A4", ORDER)
        lhs = builders.specialize(a4, {"x1": {"x": 1}, "x2": {"x": 1}}, ("x",))
        self.assertEqual(lhs, builders.build_fs4_closed(ORDER).scale(2))

    def test_x0(self):
        z2z2 = builders.build_explicit("Z2xZ2", ORDER)
        sixth = builders.specialize(z2z2, DIAGONAL, ("u",)).scale(Fraction(1, 6))
        self.assertEqual(sixth, builders.x0_series(ORDER))
        self.assertEqual(sixth.integral_coefficient((3,)), Fraction(1, 4))


class TestTrig(SynchronousTestCase):

    def test_identities(self):
        for key in ("TRIG_TRIPLE", "TRIG_DOUBLE"):
            for shift in (0, Fraction(-1, 6)):
                lhs, rhs = builders.trig_sides(key, 10, shift)
                self.assertEqual(lhs, rhs)


class TestTable(SynchronousTestCase):

    def test_json_round_trip(self):
        values = _z2z2(4)
        text = values.to_json()
        self.assertIn('{"insertions":{"z1":1,"z2":1,"z3":1},"value":"1/4"}', text)
        self.assertIn('{"insertions":{"z1":4},"value":"-1/4"}', text)
        self.assertEqual(table.table_from_json(text), values)

    def test_csv_round_trip(self):
        values = _a4(4)
        text = values.to_csv()
        self.assertTrue(text.startswith("group,s1,s2,zeta,value\nA4,0,0,3,1/2\n"))
        self.assertEqual(table.table_from_csv(text), values)

    def test_differences(self):
        values = _z2z2(4)
        other = table.table_from_json(values.to_json())
        other[(2, 2, 0)] = other[(2, 2, 0)] + 1
        self.assertEqual(values.differences(other), [(2, 2, 0)])

    def test_monodromy_violation(self):
        series = MultiSeries(("x1", "x2", "x3"), 3, {(2, 1, 0): 1})
        self.assertRaises(MonodromyViolation, table.extract_table, series, "Z2xZ2", ("z1", "z2", "z3"))


class TestCorrections(SynchronousTestCase):
    """The kernel and the sigma line as printed, against the forms used."""

    def test_kernel_with_u_over_sqrt2_is_irrational(self):
        kernel = builders.proto_terms(prototypes.KERNEL_FS4["terms"])
        kernel[3] = HTerm(Fraction(1, 2), {"u": SQRT2 * Fraction(1, 2)}, 2)
        terms = []
        for weight, scale in ((Fraction(1, 2), 2), (1, -1)):
            for term in kernel:
                form = dict((name, value * scale if name == "u" else value)
                            for name, value in term.linear_form.items())
                terms.append(HTerm(term.phase, form, term.weight * weight))
        printed = expand_h_terms(terms, ("u", "v"), 3)
        self.assertRaises(NotRational, printed.integral_coefficient, (3, 0))
        self.assertRaises(NotRational, table.extract_table, printed, "S4", ("sigma", "zeta"))
        used = table.extract_table(builders.build_s4_section(3), "S4", ("sigma", "zeta"))
        self.assertEqual(used[(3, 0)], Fraction(4, 3))

    def test_two_term_sigma_line_misses_sigma_cubed(self):
        printed = expand_h_terms([HTerm(Fraction(-2, 3), {"x": SQRT3 * Fraction(2, 3)}, Fraction(1, 8)),
                                  HTerm(Fraction(-1, 3), {"x": SQRT3 * Fraction(1, 3)}, 2)], ("x",), 3)
        self.assertEqual(printed.integral_coefficient((3,)), Fraction(5, 18))
        self.assertEqual(len(prototypes.FS4_SIGMA_LINE["terms"]), 4)
        self.assertEqual(builders.build_fs4_closed(3).integral_coefficient((3,)), Fraction(4, 3))
