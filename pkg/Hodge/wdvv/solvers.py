"""
Solvers

Recompute the integral tables from seeds and WDVV alone.

Z2xZ2 and A4 are solved length by length: every canonical identity over
every base of length n - 3 is linear in the length-n entries, and the
over-determined system is closed off with class-permutation symmetry
and the seeded one-class values. A rank short of the unknown count
raises `RankDeficient`; a contradiction raises `InconsistentSystem`.

S4 is solved on five insertion families only, indexed over
(tau, sigma, rho, zeta):

    T[a][b] = <sigma^a zeta^b>          (0, a, 0, b)
    B       = <tau^2 sigma^n>           (2, n, 0, 0)
    E       = <tau^2 sigma^a zeta>      (2, a, 0, 1)
    C       = <tau sigma^m rho zeta>    (1, m, 1, 1)
    D       = <tau sigma^m rho>         (1, m, 1, 0)

The sigma-zeta section T is built column by column in a. The a = 0
column comes from the identity <sigma^0 zeta^b (sz|sz)> = <... (ss|zz)>,
quadratic at b = 0 and linear with leading coefficient 4 after that.
Each later column starts from the C/D relation,

    (6 Y2 B + 4 Y3 + 1)(3 Y0 B + 2 Y1 - 4 B^2 + 2) = 2 (3 Y1 B + 2 Y2 - B)^2,

with Y_b = d^(3-b)/du^(3-b) d^b/dv^b T(u, 0), and continues with the same
identity over the base sigma^a zeta^b.

"""

from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from Hodge.algebra import rational
from Hodge.algebra.linalg import LinearSystem
from Hodge.algebra.series import MultiSeries, monomials
from Hodge.mckay.groups import group_table
from Hodge.potentials.table import HurwitzTable
from Hodge.utils.errors import (
    BranchAmbiguity,
    DeterminantZero,
    InconsistentSquares,
    InconsistentSystem,
    LeadingCoefficientZero,
    MissingEntry,
    RankDeficient,
)
from Hodge.utils.logger import log_err, log_info
from Hodge.wdvv.identities import (
    bases,
    canonical_identities,
    evaluate_identity,
    generate_identity,
    linearize,
)
from Hodge.wdvv.seeds import cross_group_seeds, initial_seed, seed_length_three

S4_CLASSES = ("tau", "sigma", "rho", "zeta")


def _t(a, b):
    return (0, a, 0, b)


def _b(n):
    return (2, n, 0, 0)


def _e(a):
    return (2, a, 0, 1)


def _c(m):
    return (1, m, 1, 1)


def _d(m):
    return (1, m, 1, 0)


class SolverReport(object):
    """
    What a solver did, per length and overall.

    Attributes:
        group (str): The group solved.
        steps (list): One dict per stage with at least "stage".
        notes (dict): Determinants, branch roots, leading coefficients.

    """

    def __init__(self, group):
        self.group = group
        self.steps = []
        self.notes = {}

    def add_step(self, stage, **fields):
        fields["stage"] = stage
        self.steps.append(fields)
        log_info("{group} {stage}: {fields}", group=self.group, stage=stage,
                 fields=", ".join("%s=%s" % (key, fields[key]) for key in sorted(fields) if key != "stage"))

    def note(self, key, value):
        self.notes.setdefault(key, []).append(value)

    def to_dict(self):
        def plain(value):
            if isinstance(value, Fraction):
                return rational.to_string(value)
            if isinstance(value, (list, tuple)):
                return [plain(item) for item in value]
            if isinstance(value, dict):
                return dict((key, plain(item)) for key, item in value.items())
            return value
        return {"group": self.group, "steps": plain(self.steps), "notes": plain(self.notes)}

    def __repr__(self):
        return "<SolverReport %s steps=%d>" % (self.group, len(self.steps))


def _require(mapping, low, high, what):
    missing = [n for n in range(low, high + 1) if n not in mapping]
    if missing:
        raise MissingEntry("seed has no %s for lengths %r" % (what, missing))


def _fill(table, exps, value, source):
    """Write an entry, refusing to overwrite a different value."""
    value = Fraction(value)
    current = table.get(exps)
    if current is not None and current != value:
        raise InconsistentSystem("%s gives %r = %s but the table holds %s" % (
            source, exps, rational.to_string(value), rational.to_string(current)))
    table[exps] = value


######################################################################
# Z2xZ2 and A4
######################################################################

def _solve_length(table, n, constraints, report):
    """
    Solve all length-n entries of `table` from the canonical identities
    plus `constraints(allowed)`, a list of (coeffs, rhs) equations.

    """
    group = group_table(table.group)
    allowed = []
    for exps in monomials(len(table.classes), n, n):
        if table.vanishes(exps):
            table[exps] = 0
        else:
            allowed.append(exps)
    unknowns = set(allowed)
    system = LinearSystem(allowed)
    for base in bases(group, n - 3):
        for identity in canonical_identities(group, base):
            coeffs, constant = linearize(identity, table, unknowns)
            system.add_equation(coeffs, -constant)
    for coeffs, rhs in constraints(allowed):
        system.add_equation(coeffs, rhs)
    try:
        solution = system.solve()
    except RankDeficient:
        log_err("{group} length {n}: rank {rank} for {count} unknowns",
                group=group.name, n=n, rank=system.rank, count=len(allowed))
        raise
    for exps, value in solution.items():
        table[exps] = value
    report.add_step("length", length=n, unknowns=len(allowed), equations=system.equations, rank=system.rank)


def _symmetry(allowed, images):
    equations = []
    for exps in allowed:
        for image in images(exps):
            if image != exps:
                equations.append(({exps: 1, image: -1}, 0))
    return equations


def solve_z2z2(seed, order, report=None):
    """
    The Z2xZ2 table from the length-three counts, <z1^n> and WDVV.

    Args:
        seed (SeedData): Needs `fp` through `order`.
        order (int): Largest length.
        report (SolverReport, optional): Filled with one step per length.

    Returns:
        table (HurwitzTable): Over (z1, z2, z3), every length 3..order.

    Raises:
        RankDeficient: If some length is not determined.
        InconsistentSystem: If the seeds contradict WDVV.

    """
    report = report or SolverReport("Z2xZ2")
    _require(seed.fp, 4, order, "one-class Z2xZ2 values")
    group = group_table("Z2xZ2")
    table = seed_length_three(HurwitzTable(group.name, group.class_names[1:], order), seed.length3[group.name])

    for n in range(4, order + 1):
        def constraints(allowed, n=n):
            equations = _symmetry(allowed, lambda exps: [tuple(exps[i] for i in perm)
                                                         for perm in permutations(range(3))])
            if (n, 0, 0) in allowed:
                equations.append(({(n, 0, 0): 1}, seed.fp[n]))
            return equations
        _solve_length(table, n, constraints, report)
    return table


def binomial_determinant(n):
    """
    sum_i (-1)^i binom(n, k + 3i) with k = 2n mod 3, the determinant
    that makes the <sigma^n>^S4 equation independent at even n.

    """
    k = (2 * n) % 3
    return sum((-1) ** i * comb(n, k + 3 * i) for i in range((n - k) // 3 + 1))


def solve_a4(seed, order, report=None):
    """
    The A4 table from the length-three counts, <zeta^n>^A4,
    <sigma^n>^S4 and WDVV.

    Args:
        seed (SeedData): Needs `a4_zeta` and `s4_sigma` through `order`.
        order (int): Largest length.
        report (SolverReport, optional): Gets the per-length steps and
            the binomial determinants.

    Returns:
        table (HurwitzTable): Over (s1, s2, zeta).

    Raises:
        DeterminantZero: If the binomial determinant vanishes at an
            even length.
        RankDeficient: If some length is not determined.

    """
    report = report or SolverReport("A4")
    _require(seed.a4_zeta, 4, order, "A4 zeta values")
    _require(seed.s4_sigma, 4, order, "S4 sigma values")
    group = group_table("A4")
    table = seed_length_three(HurwitzTable(group.name, group.class_names[1:], order), seed.length3[group.name])

    for n in range(4, order + 1):
        if n % 2 == 0:
            determinant = binomial_determinant(n)
            if not determinant:
                raise DeterminantZero("binomial determinant vanishes at length %d" % n)
            report.note("determinants", {"length": n, "value": determinant})

        def constraints(allowed, n=n):
            equations = _symmetry(allowed, lambda exps: [(exps[1], exps[0], exps[2])])
            equations.append(({(0, 0, n): 1}, seed.a4_zeta[n]))
            sigma = dict(((a, n - a, 0), comb(n, a)) for a in range(n + 1) if (a, n - a, 0) in allowed)
            equations.append((sigma, 2 * seed.s4_sigma[n]))
            return equations
        _solve_length(table, n, constraints, report)
    return table


######################################################################
# S4 families
######################################################################

def _sigma_zeta(group):
    sigma, zeta = group.class_index("sigma"), group.class_index("zeta")
    return (sigma, zeta, sigma, zeta)


def _quadratic_roots(c2, c1, c0):
    if not c2:
        return [] if not c1 else [-c0 / c1]
    root = rational.rational_sqrt(c1 * c1 - 4 * c2 * c0)
    if root is None:
        return []
    return sorted(set([(-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)]))


def _start_column(table, report):
    """
    The empty-base identity is quadratic in y = <sigma^2 zeta>; fit it
    through three points and keep the root the length-three count gives.

    """
    group = group_table("S4")
    identity = generate_identity(group, _t(0, 0), _sigma_zeta(group))
    key = _t(2, 1)
    residual = dict((y, evaluate_identity(identity, table, {key: Fraction(y)})) for y in (0, 1, -1))
    c0 = residual[0]
    c1 = (residual[1] - residual[-1]) / 2
    c2 = (residual[1] + residual[-1]) / 2 - c0
    roots = _quadratic_roots(c2, c1, c0)
    matching = [root for root in roots if root == table[key]]
    if len(matching) != 1:
        raise BranchAmbiguity("roots %r of %s y^2 + %s y + %s leave <sigma^2 zeta> = %s undecided"
                              % (roots, c2, c1, c0, table[key]))
    report.notes["branch"] = {"polynomial": [c0, c1, c2], "roots": roots, "chosen": matching[0]}
    report.add_step("branch", roots=", ".join(rational.to_string(root) for root in roots))


def _identity_step(table, a, b, report):
    """T[a+2][b+1] from the identity over sigma^a zeta^b."""
    group = group_table("S4")
    key = _t(a + 2, b + 1)
    identity = generate_identity(group, _t(a, b), _sigma_zeta(group))
    coeffs, constant = linearize(identity, table, set([key]))
    alpha = coeffs.get(key, 0)
    if not alpha:
        raise LeadingCoefficientZero("identity over sigma^%d zeta^%d does not involve %r" % (a, b, key))
    if alpha not in report.notes.setdefault("identity_alpha", []):
        report.note("identity_alpha", alpha)
    table[key] = -constant / alpha


def _one_variable(values, degree):
    """sum_m values(m) u^m / m! through `degree`."""
    return MultiSeries(("u",), degree, dict(((m,), Fraction(values(m), factorial(m))) for m in range(degree + 1)))


def _section_series(table, seed, degree, overrides=None):
    overrides = overrides or {}

    def entry(exps):
        if exps in overrides:
            return overrides[exps]
        return table[exps]

    y = [_one_variable(lambda m, b=b: entry(_t(m + 3 - b, b)), degree) for b in range(4)]
    b = _one_variable(lambda m: seed.b_series[m], degree)
    return y, b


def cd_relation(y, b):
    """
    The three auxiliary series and the residual of the C/D relation.

    Args:
        y (list): Y0..Y3 as one-variable series.
        b (MultiSeries): B(u).

    Returns:
        l1, l2, l3, residual (tuple): 6 Y2 B + 4 Y3 + 1 (= 8 C^2),
            3 Y1 B + 2 Y2 - B (= 4 C D), 3 Y0 B + 2 Y1 + 2 - 4 B^2 (= 4 D^2)
            and l1 l3 - 2 l2^2.

    """
    one = MultiSeries(b.variables, b.order, {(0,): 1})
    l1 = (y[2] * b).scale(6) + y[3].scale(4) + one
    l2 = (y[1] * b).scale(3) + y[2].scale(2) - b
    l3 = (y[0] * b).scale(3) + y[1].scale(2) + one.scale(2) - (b * b).scale(4)
    return l1, l2, l3, l1 * l3 - (l2 * l2).scale(2)


def _column_start(table, seed, a, report):
    """T[a+2][0] from the u^(a-1) coefficient of the C/D relation."""
    degree = a - 1
    key = _t(a + 2, 0)
    values = []
    for trial in (0, 1):
        y, b = _section_series(table, seed, degree, {key: Fraction(trial)})
        values.append(cd_relation(y, b)[3].coefficient((degree,)).as_rational())
    slope = values[1] - values[0]
    alpha = slope * factorial(degree)
    if not alpha:
        raise LeadingCoefficientZero("the C/D relation does not involve %r at u^%d" % (key, degree))
    if alpha not in report.notes.setdefault("relation_alpha", []):
        report.note("relation_alpha", alpha)
    _fill(table, key, -values[0] / slope, "the C/D relation")


def solve_s4(seed, order, report=None):
    """
    The sigma-zeta section of S4 with the tau^2 families, from the
    length-three counts, X0, X1 = 0, B and <tau^2 sigma^a zeta> =
    [a = 0]/4.

    Args:
        seed (SeedData): Needs `x0` and `b_series` through `order`.
        order (int): Largest length.
        report (SolverReport, optional): Gets the branch and the
            leading coefficients.

    Returns:
        table (HurwitzTable): Over (tau, sigma, rho, zeta), holding the
            T, B and E families and the length-three entries.

    Raises:
        BranchAmbiguity: If the quadratic start has no unique root
            matching <sigma^2 zeta>.
        LeadingCoefficientZero: If a step cannot be solved.
        InconsistentSystem: If a step contradicts a seeded entry.

    """
    report = report or SolverReport("S4")
    _require(seed.x0, 3, order, "X0 coefficients")
    table = seed_length_three(HurwitzTable("S4", S4_CLASSES, order), seed.length3["S4"])
    seed_families(table, seed, order)
    for n in range(3, order + 1):
        _fill(table, _t(0, n), seed.x0[n], "X0")
    for n in range(2, order):
        _fill(table, _t(1, n), 0, "X1")

    _start_column(table, report)
    for b in range(1, order - 2):
        _identity_step(table, 0, b, report)
    report.add_step("column", a=0, entries=order - 3)

    for a in range(1, order - 1):
        _column_start(table, seed, a, report)
        for b in range(order - a - 2):
            _identity_step(table, a, b, report)
        report.add_step("column", a=a, entries=order - a - 1)
    return table


def seed_families(table, seed, order):
    """The B and E families, from B(u) and <tau^2 sigma^a zeta> = [a = 0]/4."""
    for n in range(1, order - 1):
        _fill(table, _b(n), seed.b_series[n - 1], "B")
    for a in range(order - 2):
        _fill(table, _e(a), Fraction(1, 4) if a == 0 else 0, "tau^2 zeta family")
    return table


GENERIC_QUADRUPLES = (
    ("tau", "zeta", "tau", "zeta"),
    ("tau", "sigma", "tau", "zeta"),
    ("tau", "sigma", "tau", "sigma"),
)


def recover_cd(table, seed, order, report=None):
    """
    Recover C(u) = sum <tau sigma^m rho zeta> u^m/m! and
    D(u) = sum <tau sigma^(m+1) rho> u^m/m! from the section and B, and
    certify the generic identities <sigma^a (tz|tz)> = <sigma^a (tt|zz)>,
    <sigma^a (ts|tz)> = <sigma^a (tt|sz)> and <sigma^a (ts|ts)> =
    <sigma^a (tt|ss)> on the completed five families.

    Args:
        table (HurwitzTable): From `solve_s4` or `closed_s4_families`;
            the C and D families are written into it.
        seed (SeedData): For B(u).
        order (int): Largest length.
        report (SolverReport, optional): Gets C(0) and D(0).

    Returns:
        result (dict): "c_squared", "cd", "d_squared" (the series C^2,
            CD, D^2), "c", "d" and "identities", the number certified.

    Raises:
        InconsistentSquares: If the C/D relation or 4 C D = l2 fails.
        InconsistentSystem: If a generic identity does not hold.

    """
    report = report or SolverReport("S4")
    degree = order - 3
    y, b = _section_series(table, seed, degree)
    l1, l2, l3, residual = cd_relation(y, b)
    if residual.terms:
        raise InconsistentSquares("the C/D relation fails at u^%d" % min(residual.terms)[0])
    c = l1.scale(Fraction(1, 8)).sqrt(Fraction(1, 2))
    d = l3.scale(Fraction(1, 4)).sqrt(1)
    if not (c * d).scale(4).equal_through(l2):
        raise InconsistentSquares("4 C D differs from 3 Y1 B + 2 Y2 - B")
    for m in range(degree + 1):
        _fill(table, _c(m), c.integral_coefficient((m,)), "C")
        _fill(table, _d(m + 1), d.integral_coefficient((m,)), "D")

    group = group_table("S4")
    count = 0
    for a in range(degree + 1):
        for tokens in GENERIC_QUADRUPLES:
            identity = generate_identity(group, _t(a, 0), [group.class_index(token) for token in tokens])
            value = evaluate_identity(identity, table)
            if value:
                raise InconsistentSystem("%r leaves residual %s" % (identity, rational.to_string(value)))
            count += 1
    report.notes["cd"] = {"c0": c.integral_coefficient((0,)), "d0": d.integral_coefficient((0,))}
    report.add_step("cd", degree=degree, identities=count)
    return {
        "c_squared": l1.scale(Fraction(1, 8)),
        "cd": l2.scale(Fraction(1, 4)),
        "d_squared": l3.scale(Fraction(1, 4)),
        "c": c,
        "d": d,
        "identities": count,
    }


def section_table(table):
    """The sigma-zeta section of an S4 family table, over (sigma, zeta)."""
    section = HurwitzTable("S4", ("sigma", "zeta"), table.order)
    for a, b in monomials(2, table.order, 3):
        section[(a, b)] = table[_t(a, b)]
    return section


def closed_s4_families(section, seed, order):
    """
    The five S4 families around a closed-form section: T from
    `section`, B and E from the seeds, C and D from `recover_cd`.

    """
    table = seed_length_three(HurwitzTable("S4", S4_CLASSES, order), seed.length3["S4"])
    seed_families(table, seed, order)
    for (a, b), value in section.items():
        if a + b <= order:
            _fill(table, _t(a, b), value, "closed section")
    recover_cd(table, seed, order)
    return table


######################################################################
# Pipeline
######################################################################

class RecursionResult(object):
    """
    Everything the recursion route produced.

    Attributes:
        seed (SeedData): Seeds, with the cross-group values filled in.
        tables (dict): "Z2xZ2", "A4" and "S4" (the family table).
        section (HurwitzTable): The S4 section over (sigma, zeta).
        reports (dict): Group -> SolverReport.
        cd (dict): `recover_cd` output.

    """

    def __init__(self, seed):
        self.seed = seed
        self.tables = {}
        self.section = None
        self.reports = {}
        self.cd = None

    def to_dict(self):
        return dict((group, report.to_dict()) for group, report in sorted(self.reports.items()))


def run_recursion(order):
    """
    Seeds -> Z2xZ2 -> (<zeta^n>^A4, X0) -> S4 -> <sigma^n>^S4 -> A4.

    Args:
        order (int): Largest length.

    Returns:
        result (RecursionResult): All tables and reports.

    """
    seed = initial_seed(order)
    result = RecursionResult(seed)
    for group in ("Z2xZ2", "S4", "A4"):
        result.reports[group] = SolverReport(group)

    result.tables["Z2xZ2"] = solve_z2z2(seed, order, result.reports["Z2xZ2"])
    cross_group_seeds(seed, result.tables["Z2xZ2"])

    s4 = solve_s4(seed, order, result.reports["S4"])
    result.cd = recover_cd(s4, seed, order, result.reports["S4"])
    result.tables["S4"] = s4
    result.section = section_table(s4)
    for n in range(3, order + 1):
        seed.s4_sigma[n] = s4[_t(n, 0)]

    result.tables["A4"] = solve_a4(seed, order, result.reports["A4"])
    log_info("recursion through order {order} done", order=order)
    return result
