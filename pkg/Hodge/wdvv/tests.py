"""
Tests for the WDVV identities, the seeds and the recursion schedules.

The solver tests run at small orders; the order-10 route comparison is
the job of `verify --check recursion`.

"""

import json
from fractions import Fraction

import mock
from twisted.trial.unittest import SynchronousTestCase

from Hodge.algebra.series import MultiSeries
from Hodge.mckay.groups import group_table
from Hodge.potentials import builders
from Hodge.potentials.table import HurwitzTable, extract_table
from Hodge.utils.errors import BranchAmbiguity, DeterminantZero, LeadingCoefficientZero, MissingEntry
from Hodge.wdvv import identities, seeds, solvers

ORDER = 6


def _closed(group, order=ORDER):
    data = group_table(group)
    return extract_table(builders.build_explicit(group, order), group, data.class_names[1:])


def _closed_section(order=ORDER):
    return extract_table(builders.build_s4_section(order), "S4", ("sigma", "zeta"))


def _length_three(group):
    data = group_table(group)
    return seeds.seed_length_three(HurwitzTable(group, data.class_names[1:], 3))


class TestIdentity(SynchronousTestCase):

    def test_empty_base(self):
        group = group_table("Z2xZ2")
        identity = identities.generate_identity(group, (0, 0, 0), (1, 1, 2, 2))
        self.assertEqual(identity.lhs_terms, [(Fraction(4), (1, 2, 0, 0), (1, 0, 2, 0))])
        self.assertEqual(identity.rhs_terms, [(Fraction(4), (0, 1, 1, 1), (0, 1, 1, 1))])
        self.assertEqual(identities.evaluate_identity(identity, _length_three("Z2xZ2")), 0)

    def test_s4_middle_classes(self):
        group = group_table("S4")
        identity = identities.generate_identity(group, (0, 1, 0, 0), (1, 1, 4, 4))
        middle = set()
        for _, left, _ in identity.lhs_terms:
            rest = list(left)
            rest[1] -= 2
            if sum(rest) == 2:
                rest[2] -= 1
            middle.add(rest.index(1))
        self.assertTrue(middle)
        self.assertTrue(middle <= set([0, 2, 4]))

    def test_term_lengths(self):
        group = group_table("A4")
        base = (1, 0, 2)
        for quadruple in identities.canonical_quadruples(group):
            identity = identities.generate_identity(group, base, quadruple)
            for _, left, right in identity.terms():
                self.assertEqual(sum(left) + sum(right), sum(base) + 6)

    def test_canonical_quadruples(self):
        self.assertEqual(len(identities.canonical_quadruples(group_table("Z2xZ2"))), 6)
        self.assertEqual(len(identities.canonical_quadruples(group_table("S4"))), 20)

    def test_bases(self):
        group = group_table("Z2xZ2")
        self.assertEqual(identities.bases(group, 0), [(0, 0, 0)])
        self.assertEqual(len(identities.bases(group, 2)), 6)

    def test_missing_entry(self):
        group = group_table("Z2xZ2")
        identity = identities.generate_identity(group, (1, 0, 0), (1, 1, 2, 3))
        self.assertRaises(MissingEntry, identities.evaluate_identity, identity, _length_three("Z2xZ2"))

    def test_linearize(self):
        group = group_table("Z2xZ2")
        identity = identities.generate_identity(group, (1, 0, 0), (1, 1, 2, 3))
        coeffs, constant = identities.linearize(identity, _length_three("Z2xZ2"),
                                                set([(4, 0, 0), (2, 2, 0), (2, 0, 2)]))
        self.assertEqual(coeffs, {(4, 0, 0): 1, (2, 2, 0): -1, (2, 0, 2): -1})
        self.assertEqual(constant, 0)

    def test_overrides(self):
        group = group_table("Z2xZ2")
        identity = identities.generate_identity(group, (1, 0, 0), (1, 1, 2, 3))
        overrides = {(4, 0, 0): Fraction(-1, 4), (2, 2, 0): Fraction(-1, 8), (2, 0, 2): Fraction(-1, 8)}
        self.assertEqual(identities.evaluate_identity(identity, _length_three("Z2xZ2"), overrides), 0)
        overrides[(4, 0, 0)] = 0
        self.assertEqual(identities.evaluate_identity(identity, _length_three("Z2xZ2"), overrides),
                         Fraction(1, 4))


class TestClosedForms(SynchronousTestCase):

    def _check_all(self, group, values):
        data = group_table(group)
        count = 0
        for length in range(values.order - 2):
            for base in identities.bases(data, length):
                for identity in identities.canonical_identities(data, base):
                    self.assertEqual(identities.evaluate_identity(identity, values), 0, identity)
                    count += 1
        return count

    def test_z2z2(self):
        self.assertTrue(self._check_all("Z2xZ2", _closed("Z2xZ2")) > 0)

    def test_a4(self):
        self.assertTrue(self._check_all("A4", _closed("A4")) > 0)

    def test_corrupted(self):
        values = _closed("Z2xZ2", 5)
        values[(2, 2, 0)] = values[(2, 2, 0)] + 1
        data = group_table("Z2xZ2")
        residuals = [identities.evaluate_identity(identity, values)
                     for base in identities.bases(data, 1)
                     for identity in identities.canonical_identities(data, base)]
        self.assertTrue(any(residuals))

    def test_corollary(self):
        for group in ("Z2xZ2", "A4"):
            self.assertTrue(identities.corollary_symmetry_check(builders.build_explicit(group, ORDER),
                                                                group_table(group)))

    def test_corollary_detects_corruption(self):
        series = builders.build_explicit("Z2xZ2", ORDER)
        corrupt = series + MultiSeries(series.variables, ORDER, {(2, 2, 0): 1})
        self.assertFalse(identities.corollary_symmetry_check(corrupt, group_table("Z2xZ2")))

    def test_z2z2_relations(self):
        for residual in identities.z2z2_relations(builders.build_explicit("Z2xZ2", ORDER)):
            self.assertEqual(residual.terms, {})
            self.assertEqual(residual.order, ORDER - 3)

    def test_section_pde(self):
        self.assertEqual(identities.section_pde_residual(builders.build_s4_section(ORDER)).terms, {})


class TestSeeds(SynchronousTestCase):

    def test_initial_seed(self):
        seed = seeds.initial_seed(ORDER)
        self.assertEqual(seed.length3["S4"][(0, 4, 4)], Fraction(1, 8))
        self.assertEqual(seed.length3["A4"][(1, 2, 3)], 1)
        self.assertEqual(seed.fp[4], Fraction(-1, 4))
        self.assertEqual(seed.b_series[:2], [1, Fraction(-2, 3)])
        self.assertEqual(seed.a4_zeta, {})

    def test_seed_length_three(self):
        values = _length_three("A4")
        self.assertEqual(values[(3, 0, 0)], Fraction(4, 3))
        self.assertEqual(values[(0, 0, 3)], Fraction(1, 2))
        self.assertEqual(values[(2, 1, 0)], 0)
        self.assertEqual(len(values), 10)

    def test_seed_length_three_reads_counts(self):
        counts = seeds.length_three("A4")
        counts[(1, 1, 1)] = Fraction(5)
        values = seeds.seed_length_three(HurwitzTable("A4", ("s1", "s2", "zeta"), 3), counts)
        self.assertEqual(values[(3, 0, 0)], 5)
        self.assertEqual(values[(0, 3, 0)], Fraction(4, 3))

    def test_solver_uses_seeded_counts(self):
        seed = seeds.initial_seed(4)
        seed.length3["Z2xZ2"] = dict(seed.length3["Z2xZ2"])
        seed.length3["Z2xZ2"][(1, 2, 3)] = Fraction(1, 2)
        values = solvers.solve_z2z2(seed, 3)
        self.assertEqual(values[(1, 1, 1)], Fraction(1, 2))

    def test_index_formulas(self):
        z2z2, a4, section = _closed("Z2xZ2"), _closed("A4"), _closed_section()
        self.assertEqual(seeds.index_three_zeta(z2z2, 3), Fraction(1, 2))
        self.assertEqual(seeds.index_six_zeta(z2z2, 3), Fraction(1, 4))
        self.assertEqual(seeds.index_two_sigma(a4, 3), Fraction(4, 3))
        for n in range(3, ORDER + 1):
            self.assertEqual(seeds.index_three_zeta(z2z2, n), a4[(0, 0, n)])
            self.assertEqual(seeds.index_six_zeta(z2z2, n), section[(0, n)])
            self.assertEqual(seeds.index_two_sigma(a4, n), section[(n, 0)])


class TestSolvers(SynchronousTestCase):

    def test_binomial_determinant(self):
        self.assertEqual(solvers.binomial_determinant(4), 6)
        self.assertEqual(solvers.binomial_determinant(6), -18)
        for n in range(4, 17, 2):
            self.assertNotEqual(solvers.binomial_determinant(n), 0)

    def test_z2z2(self):
        seed = seeds.initial_seed(ORDER)
        report = solvers.SolverReport("Z2xZ2")
        values = solvers.solve_z2z2(seed, ORDER, report)
        self.assertEqual(values, _closed("Z2xZ2"))
        self.assertEqual(values[(2, 2, 0)], Fraction(-1, 8))
        self.assertEqual(values[(3, 1, 0)], 0)
        self.assertEqual([step["length"] for step in report.steps], [4, 5, 6])
        for step in report.steps:
            self.assertEqual(step["rank"], step["unknowns"])

    def test_z2z2_needs_fp(self):
        seed = seeds.initial_seed(4)
        seed.fp = {}
        self.assertRaises(MissingEntry, solvers.solve_z2z2, seed, 4)

    def test_a4_from_closed_seeds(self):
        seed = seeds.initial_seed(ORDER)
        z2z2, section = _closed("Z2xZ2"), _closed_section()
        seed.a4_zeta = dict((n, seeds.index_three_zeta(z2z2, n)) for n in range(3, ORDER + 1))
        seed.s4_sigma = dict((n, section[(n, 0)]) for n in range(3, ORDER + 1))
        report = solvers.SolverReport("A4")
        self.assertEqual(solvers.solve_a4(seed, ORDER, report), _closed("A4"))
        self.assertEqual([note["value"] for note in report.notes["determinants"]], [6, -18])

    def test_a4_requires_sigma(self):
        seed = seeds.initial_seed(ORDER)
        seed.a4_zeta = dict((n, Fraction(0)) for n in range(3, ORDER + 1))
        self.assertRaises(MissingEntry, solvers.solve_a4, seed, ORDER)

    def test_a4_determinant_zero(self):
        seed = seeds.initial_seed(4)
        seed.a4_zeta = {3: Fraction(0), 4: Fraction(0)}
        seed.s4_sigma = {3: Fraction(0), 4: Fraction(0)}
        with mock.patch("Hodge.wdvv.solvers.binomial_determinant", return_value=0):
            self.assertRaises(DeterminantZero, solvers.solve_a4, seed, 4)

    def test_s4(self):
        order = 7
        seed = seeds.initial_seed(order)
        seeds.cross_group_seeds(seed, solvers.solve_z2z2(seed, order))
        report = solvers.SolverReport("S4")
        values = solvers.solve_s4(seed, order, report)
        self.assertEqual(solvers.section_table(values), _closed_section(order))
        self.assertEqual(report.notes["branch"]["roots"], [Fraction(-1, 3), 1])
        self.assertEqual(report.notes["branch"]["chosen"], 1)
        self.assertEqual(report.notes["identity_alpha"], [4])
        self.assertEqual(report.notes["relation_alpha"], [6])
        for n in range(2, order):
            self.assertEqual(values[(0, 1, 0, n)], 0)

        cd = solvers.recover_cd(values, seed, order, report)
        self.assertEqual(cd["c_squared"].integral_coefficient((0,)), Fraction(1, 4))
        self.assertEqual(cd["d_squared"].integral_coefficient((0,)), 1)
        self.assertTrue((cd["c_squared"] * cd["d_squared"]).equal_through(cd["cd"] * cd["cd"]))
        self.assertEqual(values[(1, 0, 1, 1)], Fraction(1, 2))
        self.assertEqual(values[(1, 1, 1, 0)], 1)
        self.assertEqual(cd["identities"], 3 * (order - 2))

        closed = solvers.closed_s4_families(_closed_section(order), seed, order)
        self.assertEqual(closed, values)

    def test_branch_ambiguity(self):
        values = seeds.seed_length_three(HurwitzTable("S4", solvers.S4_CLASSES, 3))
        values[(0, 2, 0, 1)] = 5
        self.assertRaises(BranchAmbiguity, solvers._start_column, values, solvers.SolverReport("S4"))

    def test_leading_coefficient_zero(self):
        values = seeds.seed_length_three(HurwitzTable("S4", solvers.S4_CLASSES, 4))
        with mock.patch("Hodge.wdvv.solvers.linearize", return_value=({}, Fraction(0))):
            self.assertRaises(LeadingCoefficientZero, solvers._identity_step, values, 0, 1,
                              solvers.SolverReport("S4"))

    def test_pipeline(self):
        result = solvers.run_recursion(ORDER)
        self.assertEqual(result.tables["Z2xZ2"], _closed("Z2xZ2"))
        self.assertEqual(result.tables["A4"], _closed("A4"))
        self.assertEqual(result.section, _closed_section())
        self.assertEqual(result.reports["A4"].notes["determinants"],
                         [{"length": 4, "value": 6}, {"length": 6, "value": -18}])
        for group in ("Z2xZ2", "A4"):
            values = result.tables[group]
            for exps, value in values.items():
                if values.vanishes(exps):
                    self.assertEqual(value, 0)
        data = json.loads(json.dumps(result.to_dict()))
        self.assertEqual(data["S4"]["notes"]["branch"]["roots"], ["-1/3", "1"])
