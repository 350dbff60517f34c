"""
Tests for the group tables, three-point counts and root systems.

"""

from fractions import Fraction
from itertools import permutations

import numpy
from twisted.trial.unittest import SynchronousTestCase

from Hodge.algebra.cyclotomic import OMEGA, SQRT3
from Hodge.mckay import groups, roots
from Hodge.utils.errors import RootNotFound, UnsupportedGroup


def _point(name, *tokens):
    group = groups.group_table(name)
    return groups.three_point(group, *[group.class_index(token) for token in tokens])


class TestGroupTable(SynchronousTestCase):

    def test_centralisers(self):
        self.assertEqual(groups.group_table("S4").z, [24, 4, 3, 4, 8])
        self.assertEqual(groups.group_table("Z2xZ2").z, [4, 4, 4, 4])
        self.assertEqual(groups.group_table("A4").z, [12, 3, 3, 4])

    def test_class_orders(self):
        self.assertEqual(groups.group_table("S4").class_orders, (1, 2, 3, 4, 2))
        self.assertEqual(groups.group_table("A4").class_orders, (1, 3, 3, 2))
        self.assertEqual(groups.group_table("Z2xZ2").class_orders, (1, 2, 2, 2))
        for order in groups.group_table("S4").class_orders:
            self.assertIs(type(order), int)

    def test_class_sizes(self):
        for name in ("Z2xZ2", "A4", "S4"):
            group = groups.group_table(name)
            self.assertEqual(sum(group.class_sizes), group.order)
            for size, z in zip(group.class_sizes, group.z):
                self.assertEqual(size * z, group.order)

    def test_chi_v(self):
        a4 = groups.group_table("A4")
        self.assertEqual(a4.chi_V[a4.class_index("zeta")], -1)
        self.assertEqual(a4.chi_V[a4.class_index("s1")], 0)
        self.assertEqual(a4.chi_V[0], 3)

    def test_inverse_involution(self):
        self.assertEqual(groups.group_table("Z2xZ2").inverse, [0, 1, 2, 3])
        self.assertEqual(groups.group_table("S4").inverse, [0, 1, 2, 3, 4])
        self.assertEqual(groups.group_table("A4").inverse, [0, 2, 1, 3])

    def test_a4_linear_characters(self):
        a4 = groups.group_table("A4")
        omega = a4.char_table[a4.irrep_names.index("omega")]
        self.assertEqual(omega[a4.class_index("s1")], OMEGA)
        self.assertEqual(omega[a4.class_index("s2")], OMEGA * OMEGA)
        self.assertEqual(omega[a4.class_index("zeta")], 1)
        self.assertEqual(a4.dims, [1, 1, 3, 1])

    def test_s4_dims(self):
        self.assertEqual(groups.group_table("S4").dims, [1, 1, 2, 3, 3])

    def test_column_orthogonality(self):
        for name in ("Z2xZ2", "A4", "S4"):
            group = groups.group_table(name)
            size = len(group.class_names)
            for i in range(size):
                for j in range(size):
                    total = sum((row[i] * row[j].conjugate() for row in group.char_table), Fraction(0))
                    self.assertEqual(total, group.z[i] if i == j else 0)

    def test_unknown(self):
        self.assertRaises(UnsupportedGroup, groups.GroupData, "A5")
        self.assertRaises(KeyError, groups.group_table("A4").class_index, "tau")


class TestThreePoint(SynchronousTestCase):

    def test_z2z2_values(self):
        self.assertEqual(_point("Z2xZ2", "z1", "z2", "z3"), Fraction(1, 4))
        for token in ("z1", "z2", "z3"):
            self.assertEqual(_point("Z2xZ2", token, token, "one"), Fraction(1, 4))
        self.assertEqual(_point("Z2xZ2", "z1", "z1", "z2"), 0)

    def test_a4_values(self):
        self.assertEqual(_point("A4", "s1", "s2", "zeta"), 1)
        self.assertEqual(_point("A4", "s1", "s1", "s1"), Fraction(4, 3))
        self.assertEqual(_point("A4", "s2", "s2", "s2"), Fraction(4, 3))
        self.assertEqual(_point("A4", "zeta", "zeta", "zeta"), Fraction(1, 2))
        self.assertEqual(_point("A4", "s1", "s1", "zeta"), 0)

    def test_s4_values(self):
        expected = {
            ("tau", "tau", "sigma"): 1,
            ("rho", "rho", "sigma"): 1,
            ("tau", "rho", "sigma"): 1,
            ("sigma", "sigma", "zeta"): 1,
            ("tau", "tau", "zeta"): Fraction(1, 4),
            ("rho", "rho", "zeta"): Fraction(1, 4),
            ("zeta", "zeta", "zeta"): Fraction(1, 4),
            ("tau", "tau", "one"): Fraction(1, 4),
            ("rho", "rho", "one"): Fraction(1, 4),
            ("sigma", "sigma", "sigma"): Fraction(4, 3),
            ("tau", "rho", "zeta"): Fraction(1, 2),
            ("sigma", "sigma", "one"): Fraction(1, 3),
            ("zeta", "zeta", "one"): Fraction(1, 8),
        }
        for tokens, value in expected.items():
            self.assertEqual(_point("S4", *tokens), value)

    def test_symmetries(self):
        for name in ("Z2xZ2", "A4", "S4"):
            group = groups.group_table(name)
            size = len(group.class_names)
            for c1 in range(size):
                for c2 in range(c1, size):
                    for c3 in range(c2, size):
                        value = groups.three_point(group, c1, c2, c3)
                        for order in permutations((c1, c2, c3)):
                            self.assertEqual(groups.three_point(group, *order), value)
                        bar = [group.inverse[c] for c in (c1, c2, c3)]
                        self.assertEqual(groups.three_point(group, *bar), value)

    def test_pairing_consistency(self):
        for name in ("Z2xZ2", "A4", "S4"):
            group = groups.group_table(name)
            for c in range(len(group.class_names)):
                self.assertEqual(groups.three_point(group, c, group.inverse[c], 0), Fraction(1, group.z[c]))

    def test_two_point_pairing(self):
        group = groups.group_table("A4")
        pairing, inverse = groups.two_point_pairing(group)
        self.assertEqual(pairing[1][2], Fraction(1, 3))
        self.assertEqual(pairing[1][1], 0)
        size = len(group.class_names)
        for i in range(size):
            for j in range(size):
                total = sum(pairing[i][k] * inverse[k][j] for k in range(size))
                self.assertEqual(total, int(i == j))


class TestMonodromy(SynchronousTestCase):

    def test_z2z2(self):
        group = groups.group_table("Z2xZ2")
        self.assertTrue(groups.monodromy_vanishes(group, (2, 1, 0)))
        self.assertFalse(groups.monodromy_vanishes(group, (1, 1, 1)))
        self.assertFalse(groups.monodromy_vanishes(group, (4, 2, 0)))

    def test_a4(self):
        group = groups.group_table("A4")
        self.assertFalse(groups.monodromy_vanishes(group, (4, 1, 2)))
        self.assertTrue(groups.monodromy_vanishes(group, (2, 0, 1)))
        self.assertTrue(groups.monodromy_vanishes(group, (0, 1, 0, 3)))

    def test_s4_sign(self):
        group = groups.group_table("S4")
        for sigma in range(3):
            for zeta in range(3):
                self.assertFalse(groups.monodromy_vanishes(group, (1, sigma, 1, zeta)))
                self.assertTrue(groups.monodromy_vanishes(group, (1, sigma, 0, zeta)))

    def test_bad_length(self):
        self.assertRaises(ValueError, groups.monodromy_vanishes, groups.group_table("S4"), (1, 2))


class TestLMatrix(SynchronousTestCase):

    def test_z2z2(self):
        for row in groups.l_matrix(groups.group_table("Z2xZ2")):
            for entry in row:
                self.assertIn(entry, (Fraction(1, 2), Fraction(-1, 2)))

    def test_a4(self):
        a4 = groups.group_table("A4")
        matrix = groups.l_matrix(a4)
        zeta, s1, s2 = a4.class_index("zeta") - 1, a4.class_index("s1") - 1, a4.class_index("s2") - 1
        standard, omega, omegabar = 1, 0, 2
        self.assertEqual(matrix[zeta][standard], Fraction(-1, 2))
        self.assertEqual(matrix[s1][omega], OMEGA * SQRT3 * Fraction(1, 3))
        # the sigma1 and sigma2 rows are exchanged by omega <-> omegabar
        self.assertEqual(matrix[s1][omega], matrix[s2][omegabar])
        self.assertEqual(matrix[s1][omegabar], matrix[s2][omega])

    def test_s4_unsupported(self):
        self.assertRaises(UnsupportedGroup, groups.l_matrix, groups.group_table("S4"))


class TestRoots(SynchronousTestCase):

    def test_counts(self):
        self.assertEqual(len(roots.positive_roots("D4").positive_roots), 12)
        self.assertEqual(len(roots.positive_roots("E6").positive_roots), 36)

    def test_simple_roots_present(self):
        for kind in ("D4", "E6"):
            data = roots.positive_roots(kind)
            size = len(data.nodes)
            for node in range(size):
                simple = tuple(int(node == other) for other in range(size))
                self.assertIn(simple, data.positive_roots)
            for root in data.positive_roots:
                self.assertTrue(all(value >= 0 for value in root))

    def test_closure(self):
        for kind in ("D4", "E6"):
            data = roots.positive_roots(kind)
            signed = set(data.positive_roots) | set(tuple(-v for v in root) for root in data.positive_roots)
            for root in signed:
                for node in range(len(data.nodes)):
                    self.assertIn(roots.simple_reflection(data.cartan, root, node), signed)

    def test_highest_roots(self):
        d4 = roots.positive_roots("D4")
        self.assertEqual(d4.highest_root, (2, 1, 1, 1))
        e6 = roots.positive_roots("E6")
        self.assertEqual(e6.highest_root, (1, 2, 3, 2, 1, 2))
        self.assertEqual(e6.white_coordinates(e6.highest_root), (1, 3, 1))

    def test_white_coordinates(self):
        d4 = roots.positive_roots("D4")
        self.assertEqual(roots.white_coordinates(d4, (1, 0, 0, 0)), (0, 0, 0))
        self.assertEqual(roots.white_coordinates(d4, (1, 1, 0, 0)), (1, 0, 0))
        self.assertRaises(RootNotFound, d4.white_coordinates, (0, 2, 0, 0))

    def test_mirrored_e6(self):
        plain = roots.positive_roots("E6")
        mirror = roots.positive_roots("E6", mirrored=True)
        root = (1, 1, 0, 0, 0, 0)
        self.assertEqual(plain.white_coordinates(root), (1, 0, 0))
        self.assertEqual(mirror.white_coordinates(root), (0, 0, 1))

    def test_permuted_node_order(self):
        data = roots.positive_roots("E6")
        order = [5, 3, 0, 4, 2, 1]
        permuted = data.cartan[numpy.ix_(order, order)]
        relabeled = set(tuple(root[order.index(node)] for node in range(6))
                        for root in roots.reflection_closure(permuted))
        self.assertEqual(relabeled, set(data.positive_roots))
