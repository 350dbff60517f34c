"""
Seeds

The only inputs the recursion may read: the length-three counts, the
one-class tangent series of Z2xZ2, the series B(u) of S4 and the
cross-group index formulas. Nothing here touches a closed-form
potential.

Index formulas (the covering maps between the quotients have the
stated degrees):

    3 <zeta^n>^A4  = sum multinomial(n1, n2, n3) <z1^n1 z2^n2 z3^n3>^Z2xZ2
    6 <zeta^n>^S4  = the same sum
    2 <sigma^n>^S4 = sum_a binom(n, a) <s1^a s2^(n-a)>^A4

"""

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from Hodge.algebra.rational import multinomial
from Hodge.algebra.series import monomials
from Hodge.kernel.tangent import b_series, fp_tangent_series
from Hodge.mckay.groups import group_table, monodromy_vanishes, three_point
from Hodge.utils.logger import log_info


class SeedData(object):
    """
    Inputs of the three solvers.

    Args:
        order (int): Largest length the seeds cover.

    Attributes:
        order (int): As given.
        length3 (dict): Group name -> {sorted class triple: value},
            trivial class included.
        fp (dict): n -> <z1^n>^Z2xZ2.
        b_series (list): b_series[m] = <tau^2 sigma^(m+1)>^S4.
        a4_zeta (dict): n -> <zeta^n>^A4, set after the Z2xZ2 solve.
        x0 (dict): n -> <zeta^n>^S4, set after the Z2xZ2 solve.
        s4_sigma (dict): n -> <sigma^n>^S4, set after the S4 solve.

    """

    def __init__(self, order):
        self.order = order
        self.length3 = {}
        self.fp = {}
        self.b_series = []
        self.a4_zeta = {}
        self.x0 = {}
        self.s4_sigma = {}

    def __repr__(self):
        return "<SeedData order=%d a4_zeta=%d x0=%d s4_sigma=%d>" % (
            self.order, len(self.a4_zeta), len(self.x0), len(self.s4_sigma))


def length_three(name):
    """Every length-three integral of a group, keyed by sorted class triple."""
    group = group_table(name)
    classes = range(len(group.class_names))
    return dict((triple, three_point(group, *triple))
                for triple in combinations_with_replacement(classes, 3))


def initial_seed(order):
    """
    The seeds that need no solved table: length three, the tangent
    series and B(u).

    """
    seed = SeedData(order)
    for name in ("Z2xZ2", "A4", "S4"):
        seed.length3[name] = length_three(name)
    seed.fp = fp_tangent_series(order)
    seed.b_series = b_series(max(order - 2, 0))
    log_info("seeded length three and tangent data through order {order}", order=order)
    return seed


def seed_length_three(table, counts=None):
    """
    Write every monodromy-allowed length-three entry over the table's
    classes.

    Args:
        table (HurwitzTable): Receives the entries.
        counts (dict, optional): Sorted class triple -> value, as in
            `SeedData.length3`; `three_point` is asked when omitted.

    """
    if counts is None:
        counts = length_three(table.group)
    group = group_table(table.group)
    indices = [group.class_index(token) for token in table.classes]
    for exps in monomials(len(indices), 3, 3):
        if table.vanishes(exps):
            table[exps] = 0
            continue
        triple = [index for index, count in zip(indices, exps) for _ in range(count)]
        table[exps] = counts[tuple(sorted(triple))]
    return table


def _diagonal_sum(table, n):
    total = Fraction(0)
    for exps in monomials(3, n, n):
        value = table.get(exps)
        if value:
            total += multinomial(exps) * value
    return total


def index_three_zeta(table, n):
    """
    <zeta^n>^A4 from a Z2xZ2 table, through the index-3 covering.

    Args:
        table (HurwitzTable): Z2xZ2 over (z1, z2, z3), holding length n.
        n (int): The length.

    """
    return _diagonal_sum(table, n) / 3


def index_six_zeta(table, n):
    """<zeta^n>^S4 from a Z2xZ2 table, through the index-6 covering."""
    return _diagonal_sum(table, n) / 6


def index_two_sigma(table, n):
    """
    <sigma^n>^S4 from an A4 table over (s1, s2, zeta), through the
    index-2 covering.

    """
    group = group_table("A4")
    total = Fraction(0)
    for a in range(n + 1):
        exps = (a, n - a, 0)
        if not monodromy_vanishes(group, exps):
            total += comb(n, a) * table[exps]
    return total / 2


def cross_group_seeds(seed, z2z2):
    """Fill `a4_zeta` and `x0` from a solved Z2xZ2 table."""
    for n in range(3, seed.order + 1):
        seed.a4_zeta[n] = index_three_zeta(z2z2, n)
        seed.x0[n] = index_six_zeta(z2z2, n)
    return seed
