"""
Verification suites

Each suite adds named checks to a `SuiteReport`. A check is a callable
returning `passed` or `(passed, detail)`; a `HodgeError` escaping it
counts as a failure, so one broken route never hides the others.

    theorem1         root-system formula against the explicit formulas
    wdvv             identities, corollary and PDE on the closed forms
    specializations  the specialisation identities and the index formulas
    trig             the two trig identities behind them
    recursion        WDVV-solved tables against the closed forms

"""

from collections import OrderedDict
from fractions import Fraction

from Hodge.algebra import rational
from Hodge.conf import settings
from Hodge.kernel.hseries import expand_h_term
from Hodge.mckay.groups import group_table
from Hodge.potentials import builders
from Hodge.potentials.table import extract_table
from Hodge.utils.errors import HodgeError
from Hodge.utils.logger import log_info, log_trace
from Hodge.wdvv import identities, seeds, solvers

DIAGONAL = {"x1": {"x": 1}, "x2": {"x": 1}, "x3": {"x": 1}}


class CheckResult(object):
    """One named pass/fail line of a suite."""

    def __init__(self, name, passed, detail=""):
        self.name = name
        self.passed = passed
        self.detail = detail

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return "%s %s%s" % (status, self.name, " (%s)" % self.detail if self.detail else "")

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


class SuiteReport(object):
    """
    Collected results of one or more suites.

    Attributes:
        results (list): CheckResults in the order run.
        payload (dict): Machine-readable extras, e.g. solver reports.

    """

    def __init__(self):
        self.results = []
        self.payload = OrderedDict()

    def check(self, name, func, *args):
        try:
            outcome = func(*args)
        except HodgeError as err:
            log_trace("check {name} raised", name=name)
            outcome = (False, "%s: %s" % (type(err).__name__, err))
        passed, detail = outcome if isinstance(outcome, tuple) else (bool(outcome), "")
        result = CheckResult(name, bool(passed), detail)
        self.results.append(result)
        log_info("{line}", line=result.line())
        return result.passed

    @property
    def passed(self):
        return all(result.passed for result in self.results)

    def failures(self):
        return [result for result in self.results if not result.passed]


######################################################################
# Tables
######################################################################

def closed_table(group, order):
    """
    The closed-form table of a group. For S4 this is the family table
    around the closed section.

    """
    if group == "S4":
        section = extract_table(builders.build_s4_section(order), "S4", ("sigma", "zeta"))
        return solvers.closed_s4_families(section, seeds.initial_seed(order), order)
    return extract_table(builders.build_explicit(group, order), group, group_table(group).class_names[1:])


def expand_table(group, order, route=settings.DEFAULT_ROUTE):
    """The table `expand` emits, by either route."""
    if route == "recursion":
        return solvers.run_recursion(order).tables[group]
    return closed_table(group, order)


def _same_tables(solved, closed):
    if solved == closed:
        return True, "%d entries" % len(solved)
    differences = solved.differences(closed)
    if differences:
        return False, "%d entries differ, first %r" % (len(differences), differences[0])
    return False, "tables differ in classes, order or extent"


def _same_series(left, right):
    differences = left.difference(right)
    if differences:
        return False, "%d coefficients differ, first %r" % (len(differences), differences[0])
    return True, "equal through order %d" % min(left.order, right.order)


######################################################################
# theorem1
######################################################################

def _root_terms():
    counts = {}
    for group in ("Z2xZ2", "A4"):
        terms = builders.theorem1_terms(group)
        constant = [term for term in terms if term.is_constant()]
        if any(expand_h_term(term, ("x1", "x2", "x3"), 3).terms for term in constant):
            return False, "a root without white support contributes"
        counts[group] = len(terms)
    return counts == {"Z2xZ2": 12, "A4": 36}, "D4 %(Z2xZ2)d roots, E6 %(A4)d roots" % counts


def _orientation(order):
    report = builders.resolve_orientation(order)
    return report["plain"] or report["mirror"], "plain=%(plain)s mirror=%(mirror)s kept=%(kept)s" % report


def suite_theorem1(report, order):
    for group in ("Z2xZ2", "A4"):
        report.check("theorem1 %s" % group, lambda group=group: _same_series(
            builders.build_theorem1(group, order), builders.build_explicit(group, order)))
    report.check("theorem1 positive roots", _root_terms)
    report.check("theorem1 E6 orientation", _orientation, order)


######################################################################
# wdvv
######################################################################

def _identities_vanish(group, order):
    values = closed_table(group, order)
    data = group_table(group)
    count, failures = 0, []
    for length in range(order - 2):
        for base in identities.bases(data, length):
            for identity in identities.canonical_identities(data, base):
                count += 1
                if identities.evaluate_identity(identity, values):
                    failures.append(identity)
    if failures:
        return False, "%d of %d identities fail, first %r" % (len(failures), count, failures[0])
    return True, "%d identities" % count


def _z2z2_relations(order):
    residuals = identities.z2z2_relations(builders.build_explicit("Z2xZ2", order))
    return not any(residual.terms for residual in residuals), "through degree %d" % (order - 3)


def _section_pde(order):
    residual = identities.section_pde_residual(builders.build_s4_section(order))
    return not residual.terms, "through degree %d" % (order - 3)


def suite_wdvv(report, order):
    for group in ("Z2xZ2", "A4"):
        report.check("wdvv identities %s" % group, _identities_vanish, group, order)
    for group in ("Z2xZ2", "A4"):
        report.check("wdvv corollary %s" % group, lambda group=group: identities.corollary_symmetry_check(
            builders.build_explicit(group, order), group_table(group)))
    report.check("wdvv Z2xZ2 relations", _z2z2_relations, order)
    report.check("wdvv S4 section PDE", _section_pde, order)


######################################################################
# specializations
######################################################################

def _extractions(order):
    tables = [closed_table("Z2xZ2", order), closed_table("A4", order),
              extract_table(builders.build_s4_section(order), "S4", ("sigma", "zeta"))]
    a4 = tables[1]
    for (a1, a2, b), value in a4.items():
        if a4[(a2, a1, b)] != value:
            return False, "A4 table not symmetric at %r" % ((a1, a2, b),)
    return True, "%d integrals" % sum(len(values) for values in tables)


def _index_formulas(order):
    z2z2, a4 = closed_table("Z2xZ2", order), closed_table("A4", order)
    section = extract_table(builders.build_s4_section(order), "S4", ("sigma", "zeta"))
    for n in range(3, order + 1):
        if seeds.index_three_zeta(z2z2, n) != a4[(0, 0, n)]:
            return False, "<zeta^%d>^A4" % n
        if seeds.index_six_zeta(z2z2, n) != section[(0, n)]:
            return False, "<zeta^%d>^S4" % n
        if seeds.index_two_sigma(a4, n) != section[(n, 0)]:
            return False, "<sigma^%d>^S4" % n
    return True, "lengths 3..%d" % order


def suite_specializations(report, order):
    z2z2 = builders.build_explicit("Z2xZ2", order)
    a4 = builders.build_explicit("A4", order)
    section = builders.build_s4_section(order)
    fs4 = builders.build_fs4_closed(order)
    diagonal = builders.specialize(z2z2, DIAGONAL, ("x",))

    report.check("3 F_A4(0, 0, x) = F_Z2xZ2(x, x, x)", lambda: _same_series(
        builders.specialize(a4, {"x3": {"x": 1}}, ("x",)).scale(3), diagonal))
    report.check("F_A4(x, x, 0) = 2 F_S4(0, x, 0, 0)", lambda: _same_series(
        builders.specialize(a4, {"x1": {"x": 1}, "x2": {"x": 1}}, ("x",)), fs4.scale(2)))
    report.check("X0(u) = F_Z2xZ2(u, u, u) / 6", lambda: _same_series(
        builders.specialize(z2z2, dict((name, {"u": 1}) for name in DIAGONAL), ("u",)).scale(Fraction(1, 6)),
        builders.x0_series(order)))
    report.check("X0(u) = T(0, u)", lambda: _same_series(
        builders.specialize(section, {"v": {"u": 1}}, ("u",)), builders.x0_series(order)))
    report.check("T(u, v) = F_A4(u, u, v) / 2", lambda: _same_series(
        builders.specialize_s4_from_a4(order), section))
    report.check("T(x, 0) = F_S4(0, x, 0, 0)", lambda: _same_series(
        builders.specialize(section, {"u": {"x": 1}}, ("x",)), fs4))
    report.check("rational and vanishing", _extractions, order)
    report.check("index formulas", _index_formulas, order)


######################################################################
# trig
######################################################################

def suite_trig(report, order):
    order = max(order, settings.TRIG_ORDER)
    for key in ("TRIG_TRIPLE", "TRIG_DOUBLE"):
        for shift in (Fraction(0), Fraction(-1, 6)):
            report.check("%s at %s pi" % (key.lower(), shift),
                         lambda key=key, shift=shift: _same_series(*builders.trig_sides(key, order, shift)))


######################################################################
# recursion
######################################################################

def _rationals(values):
    return ", ".join(rational.to_string(value) for value in values) or "none"


def _guards(result):
    notes = result.reports["S4"].notes
    roots = notes["branch"]["roots"]
    passed = (roots == [Fraction(-1, 3), 1] and notes["branch"]["chosen"] == 1
              and notes.get("identity_alpha", [4]) == [4] and notes.get("relation_alpha", [6]) == [6])
    return passed, "roots %s, alphas %s and %s" % (
        _rationals(roots), _rationals(notes.get("identity_alpha", [])), _rationals(notes.get("relation_alpha", [])))


def _cd(result):
    cd = result.cd
    c0, d0 = cd["c_squared"].integral_coefficient((0,)), cd["d_squared"].integral_coefficient((0,))
    passed = (c0 == Fraction(1, 4) and d0 == 1
              and (cd["c_squared"] * cd["d_squared"]).equal_through(cd["cd"] * cd["cd"]))
    return passed, "C(0)^2 = %s, D(0)^2 = %s, %d identities" % (c0, d0, cd["identities"])


def _determinants(result, order):
    found = dict((note["length"], note["value"]) for note in result.reports["A4"].notes.get("determinants", []))
    expected = list(range(4, order + 1, 2))
    passed = sorted(found) == expected and all(found.values())
    return passed, ", ".join("%d: %d" % (n, found[n]) for n in sorted(found))


def _x1(result, order):
    values = result.tables["S4"]
    return all(values[(0, 1, 0, n)] == 0 for n in range(2, order))


def suite_recursion(report, order):
    holder = {}

    def solve():
        holder["result"] = solvers.run_recursion(order)
        return True, "through order %d" % order

    if not report.check("recursion solve", solve):
        return
    result = holder["result"]
    report.payload["recursion"] = result.to_dict()

    section = extract_table(builders.build_s4_section(order), "S4", ("sigma", "zeta"))
    report.check("route Z2xZ2", lambda: _same_tables(result.tables["Z2xZ2"], closed_table("Z2xZ2", order)))
    report.check("route A4", lambda: _same_tables(result.tables["A4"], closed_table("A4", order)))
    report.check("route S4 section", _same_tables, result.section, section)
    report.check("route S4 families", lambda: _same_tables(
        result.tables["S4"], solvers.closed_s4_families(section, result.seed, order)))
    report.check("S4 branch and leading coefficients", _guards, result)
    report.check("S4 X1 vanishes", _x1, result, order)
    report.check("C/D consistency", _cd, result)
    report.check("A4 binomial determinants", _determinants, result, order)


SUITES = OrderedDict([
    ("theorem1", suite_theorem1),
    ("wdvv", suite_wdvv),
    ("specializations", suite_specializations),
    ("trig", suite_trig),
    ("recursion", suite_recursion),
])


def run_suite(check, order, report=None):
    """
    Run one suite, or all of them for "all".

    Args:
        check (str): A key of `SUITES` or "all".
        order (int): Truncation.
        report (SuiteReport, optional): Collects the results.

    Returns:
        report (SuiteReport): The results.

    """
    report = report or SuiteReport()
    names = list(SUITES) if check == "all" else [check]
    for name in names:
        log_info("running suite {name} at order {order}", name=name, order=order)
        SUITES[name](report, order)
    return report
