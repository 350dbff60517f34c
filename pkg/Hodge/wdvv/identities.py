"""
WDVV identities

For insertions c_1 ... c_n (the base) and four classes a1..a4, the sum

    <c (ai aj | ak al)> = sum over sub-multisets I of the base and all
        classes g of z(g) <c_I ai aj g> <g-bar ak al c_(I^c)>

is symmetric in the four classes; the identity (a1 a2 | a3 a4) =
(a1 a3 | a2 a4) is one linear-quadratic relation among integrals. A
term is a triple (coefficient, left, right) where left and right are
exponent vectors over ALL classes of the group, trivial class first.

Integrals with a trivial insertion are the length-three two-point
values <c c-bar 1> = 1/z_c and zero for every longer length; they are
never looked up in a table. Monodromy-forbidden integrals are zero.

"""

from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb

from Hodge.algebra.series import MultiSeries
from Hodge.mckay.groups import group_table, monodromy_vanishes, three_point, two_point_pairing
from Hodge.utils.errors import MissingEntry
from Hodge.utils.logger import log_info


class WdvvIdentity(object):
    """
    One expanded identity (a1 a2 | a3 a4) = (a1 a3 | a2 a4) over a base.

    Attributes:
        group (str): The group.
        base (tuple): Exponents over the nontrivial classes.
        quadruple (tuple): Class indices (a1, a2, a3, a4).
        lhs_terms, rhs_terms (list): (coefficient, left, right) triples
            with full exponent vectors.

    """

    def __init__(self, group, base, quadruple, lhs_terms, rhs_terms):
        self.group = group
        self.base = tuple(base)
        self.quadruple = tuple(quadruple)
        self.lhs_terms = lhs_terms
        self.rhs_terms = rhs_terms

    def terms(self):
        """All terms with the right-hand side negated."""
        return ([(coeff, left, right) for coeff, left, right in self.lhs_terms]
                + [(-coeff, left, right) for coeff, left, right in self.rhs_terms])

    def __repr__(self):
        names = group_table(self.group).class_names
        a1, a2, a3, a4 = [names[index] for index in self.quadruple]
        return "<WdvvIdentity %s base=%r (%s %s|%s %s)=(%s %s|%s %s)>" % (
            self.group, self.base, a1, a2, a3, a4, a1, a3, a2, a4)


def _killed(group, vector):
    length = sum(vector)
    if length < 3:
        return True
    if vector[0] and length > 3:
        return True
    return monodromy_vanishes(group, vector)


def _side(group, base, pair, other):
    terms = []
    size = len(group.class_names)
    full_base = (0,) + tuple(base)
    for part in product(*[range(count + 1) for count in full_base]):
        multiplicity = 1
        for count, chosen in zip(full_base, part):
            multiplicity *= comb(count, chosen)
        for g in range(size):
            left = list(part)
            for index in pair + (g,):
                left[index] += 1
            right = [count - chosen for count, chosen in zip(full_base, part)]
            for index in other + (group.inverse[g],):
                right[index] += 1
            left, right = tuple(left), tuple(right)
            if _killed(group, left) or _killed(group, right):
                continue
            terms.append((Fraction(multiplicity * group.z[g]), left, right))
    return terms


def generate_identity(group, base, quadruple):
    """
    Expand (a1 a2 | a3 a4) = (a1 a3 | a2 a4) over `base`.

    Args:
        group (GroupData): The group.
        base (sequence): Exponents over the nontrivial classes.
        quadruple (sequence): Four nontrivial class indices.

    Returns:
        identity (WdvvIdentity): Terms killed by the unstable, trivial
            class or monodromy rules are already dropped.

    """
    a1, a2, a3, a4 = quadruple
    return WdvvIdentity(group.name, base, quadruple,
                        _side(group, base, (a1, a2), (a3, a4)),
                        _side(group, base, (a1, a3), (a2, a4)))


def _pairing(first, second):
    return frozenset([tuple(sorted(first)), tuple(sorted(second))])


def canonical_quadruples(group):
    """
    Quadruples giving every distinct identity between the three ways of
    splitting a 4-multiset of nontrivial classes into two pairs.

    """
    quadruples = []
    for a, b, c, d in combinations_with_replacement(group.nontrivial, 4):
        first = _pairing((a, b), (c, d))
        emitted = set()
        for quadruple, other in (((a, b, c, d), _pairing((a, c), (b, d))),
                                 ((a, b, d, c), _pairing((a, d), (b, c)))):
            if other != first and other not in emitted:
                emitted.add(other)
                quadruples.append(quadruple)
    return quadruples


def canonical_identities(group, base):
    """All canonical identities over one base."""
    return [generate_identity(group, base, quadruple) for quadruple in canonical_quadruples(group)]


def bases(group, length):
    """Exponent vectors over the nontrivial classes with a given length."""
    size = len(group.nontrivial)
    result = []
    for chosen in combinations_with_replacement(range(size), length):
        vector = [0] * size
        for index in chosen:
            vector[index] += 1
        result.append(tuple(vector))
    return sorted(result)


def correlator(group, vector, table, overrides=None):
    """
    The integral of a full exponent vector.

    Args:
        group (GroupData): The group.
        vector (tuple): Exponents over all classes.
        table (HurwitzTable): Integrals over the nontrivial classes.
        overrides (dict, optional): Nontrivial exponents -> value, read
            before the table.

    Raises:
        MissingEntry: If the table lacks a needed entry.

    """
    length = sum(vector)
    if length < 3:
        return Fraction(0)
    if vector[0]:
        if length > 3:
            return Fraction(0)
        classes = [index for index, count in enumerate(vector) for _ in range(count)]
        return three_point(group, *classes)
    if monodromy_vanishes(group, vector):
        return Fraction(0)
    key = tuple(vector[1:])
    if overrides and key in overrides:
        return overrides[key]
    value = table.get(key)
    if value is None:
        raise MissingEntry("%s table has no entry %r" % (group.name, key))
    return value


def _term_value(group, left, right, table, overrides):
    try:
        value = correlator(group, left, table, overrides)
    except MissingEntry:
        if correlator(group, right, table, overrides):
            raise
        return Fraction(0)
    if not value:
        return value
    return value * correlator(group, right, table, overrides)


def evaluate_identity(identity, table, overrides=None):
    """
    The residual LHS - RHS of an identity on a table.

    A product with a zero factor is zero even when the other factor is
    missing from the table.

    Raises:
        MissingEntry: If a needed entry is missing.

    """
    group = group_table(identity.group)
    residual = Fraction(0)
    for coeff, left, right in identity.terms():
        residual += coeff * _term_value(group, left, right, table, overrides)
    return residual


def linearize(identity, table, unknowns):
    """
    Write an identity as a linear equation in the unknown entries.

    Args:
        identity (WdvvIdentity): The identity.
        table (HurwitzTable): Known entries.
        unknowns (set): Nontrivial exponent tuples treated as unknown.

    Returns:
        coeffs, constant (tuple): With residual = sum coeffs[x] * x + constant.

    Raises:
        MissingEntry: If a known factor is missing.
        ValueError: If a term is quadratic in the unknowns.

    """
    group = group_table(identity.group)

    def unknown(vector):
        key = tuple(vector[1:])
        if not vector[0] and key in unknowns:
            return key
        return None

    coeffs, constant = {}, Fraction(0)
    for coeff, left, right in identity.terms():
        left_key, right_key = unknown(left), unknown(right)
        if left_key is not None and right_key is not None:
            raise ValueError("identity %r is quadratic in %r" % (identity, left_key))
        if left_key is None and right_key is None:
            constant += coeff * _term_value(group, left, right, table, None)
            continue
        key, known = (left_key, right) if left_key is not None else (right_key, left)
        value = correlator(group, known, table)
        if value:
            coeffs[key] = coeffs.get(key, 0) + coeff * value
    return dict((key, value) for key, value in coeffs.items() if value), constant


######################################################################
# Series forms
######################################################################

def third_derivatives(series, variables):
    """F_ijk for all index triples i <= j <= k, keyed by sorted tuple."""
    second = {}
    for i, j in combinations_with_replacement(range(len(variables)), 2):
        second[(i, j)] = series.derivatives([variables[i], variables[j]])
    third = {}
    for i, j, k in combinations_with_replacement(range(len(variables)), 3):
        third[(i, j, k)] = second[(i, j)].derivative(variables[k])
    return third


def _third(third, *indices):
    return third[tuple(sorted(indices))]


def corollary_expression(third, group, i, j, n, m, variables, order):
    """
    |G| g_ij g_nm + sum_k z_k F_ijk F_(k-bar)nm, with i, j, n, m and k
    running over the nontrivial classes (1-based class indices).

    """
    pairing, _ = two_point_pairing(group)
    constant = group.order * pairing[i][j] * pairing[n][m]
    result = MultiSeries(variables, order, {(0,) * len(variables): constant})
    for k in group.nontrivial:
        kbar = group.inverse[k]
        left = _third(third, i - 1, j - 1, k - 1)
        right = _third(third, kbar - 1, n - 1, m - 1)
        result = result + (left * right).scale(group.z[k])
    return result


def corollary_symmetry_check(series, group, order=None):
    """
    Check that the corollary expression is symmetric in its four indices
    through degree order - 3.

    Args:
        series (MultiSeries): F over the nontrivial classes.
        group (GroupData): The group.
        order (int, optional): Truncation of F to use.

    Returns:
        symmetric (bool): True when all pairings agree.

    """
    if order is not None:
        series = series.truncate(order)
    variables = series.variables
    third = third_derivatives(series, variables)
    target = series.order - 3
    failures = []
    for a, b, c, d in combinations_with_replacement(group.nontrivial, 4):
        first = corollary_expression(third, group, a, b, c, d, variables, target)
        for i, j, n, m in ((a, c, b, d), (a, d, b, c)):
            other = corollary_expression(third, group, i, j, n, m, variables, target)
            if not first.equal_through(other, target):
                failures.append((a, b, c, d))
    log_info("corollary check {group}: {count} failures through degree {target}",
             group=group.name, count=len(failures), target=target)
    return not failures


def z2z2_relations(series):
    """
    The residuals of the two displayed third-derivative relations of
    Z2xZ2:

        F121^2 + F122^2 + F123^2 - F111 F122 - F112 F222 - F113 F322 - 1/16
        F121 F133 + F122 F233 + F123 F333 - F131 F123 - F132 F223 - F133 F323

    Returns:
        residuals (tuple): Two series, zero through degree order - 3.

    """
    variables = series.variables
    third = third_derivatives(series, variables)

    def f(*indices):
        return _third(third, *[index - 1 for index in indices])

    order = series.order - 3
    first = (f(1, 2, 1) * f(1, 2, 1) + f(1, 2, 2) * f(1, 2, 2) + f(1, 2, 3) * f(1, 2, 3)
             - f(1, 1, 1) * f(1, 2, 2) - f(1, 1, 2) * f(2, 2, 2) - f(1, 1, 3) * f(3, 2, 2)
             - MultiSeries(variables, order, {(0,) * len(variables): Fraction(1, 16)}))
    second = (f(1, 2, 1) * f(1, 3, 3) + f(1, 2, 2) * f(2, 3, 3) + f(1, 2, 3) * f(3, 3, 3)
              - f(1, 3, 1) * f(1, 2, 3) - f(1, 3, 2) * f(2, 2, 3) - f(1, 3, 3) * f(3, 2, 3))
    return first, second


def section_pde_residual(section):
    """
    3 T_uuv^2 + 8 T_uvv^2 - 3 T_uuu T_uvv - 8 T_uuv T_vvv - 1 for the S4
    section T(u, v); zero through degree order - 3.

    """
    u, v = section.variables
    t_uuu = section.derivatives([u, u, u])
    t_uuv = section.derivatives([u, u, v])
    t_uvv = section.derivatives([u, v, v])
    t_vvv = section.derivatives([v, v, v])
    one = MultiSeries(section.variables, section.order - 3, {(0, 0): 1})
    return ((t_uuv * t_uuv).scale(3) + (t_uvv * t_uvv).scale(8)
            - (t_uuu * t_uvv).scale(3) - (t_uuv * t_vvv).scale(8) - one)
