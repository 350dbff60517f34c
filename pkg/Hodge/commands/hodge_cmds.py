"""
Hodge commands

The three sub-commands of the `hodge` launcher.

"""

import json

from Hodge.algebra import rational
from Hodge.commands.command import GroupCommand, Command, check_order
from Hodge.commands.suites import expand_table, run_suite
from Hodge.conf import settings
from Hodge.mckay.groups import group_table, three_point
from Hodge.utils.errors import UsageError


class CmdExpand(GroupCommand):
    """
    Compute a table of integrals

    Usage:
      expand --group <z2z2|a4|s4> [--order N] [--format json|csv]
             [--route closed|recursion] [--out FILE]

    Emits every integral of length 3..N with exact "p/q" values, in
    lexicographic exponent order. For s4 the table holds the sigma-zeta
    section and the tau^2 sigma^a, tau^2 sigma^a zeta, tau sigma^a rho
    and tau sigma^a rho zeta families. The closed route expands the
    h-series formulas; the recursion route solves WDVV from seeds.
    """
    key = "expand"
    aliases = ["table"]
    help_category = "tables"

    @classmethod
    def add_arguments(cls, parser):
        super(CmdExpand, cls).add_arguments(parser)
        parser.add_argument("--order", type=int, help="largest length (default %d)" % settings.DEFAULT_ORDER)
        parser.add_argument("--format", choices=settings.FORMATS, default=settings.DEFAULT_FORMAT)
        parser.add_argument("--route", choices=settings.ROUTES, default=settings.DEFAULT_ROUTE)
        parser.add_argument("--out", help="write the table here instead of stdout")

    def parse(self):
        super(CmdExpand, self).parse()
        self.order = check_order(self.args.order)

    def func(self):
        table = expand_table(self.group, self.order, self.args.route)
        if self.args.format == "csv":
            self.caller.data(table.to_csv())
        else:
            self.caller.data(table.to_json())
        self.caller.msg("%s: %d integrals through length %d (%s route)"
                        % (self.group, len(table), self.order, self.args.route))


class CmdVerify(Command):
    """
    Run verification suites

    Usage:
      verify [--check theorem1|wdvv|specializations|trig|recursion|all]
             [--order N] [--out FILE]

    Prints one PASS or FAIL line per sub-check on stderr and exits with
    1 if any check failed. The recursion suite also writes the solver
    reports as JSON on stdout.
    """
    key = "verify"
    aliases = ["check"]
    help_category = "verification"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--check", choices=settings.VERIFY_CHECKS, default="all")
        parser.add_argument("--order", type=int, help="truncation (default %d)" % settings.DEFAULT_ORDER)
        parser.add_argument("--out", help="write the solver reports here instead of stdout")

    def parse(self):
        self.order = check_order(self.args.order)

    def func(self):
        report = run_suite(self.args.check, self.order)
        for result in report.results:
            self.caller.msg(result.line())
        failures = report.failures()
        self.caller.msg("%d checks, %d failed" % (len(report.results), len(failures)))
        if report.payload:
            self.caller.data(json.dumps(report.payload, sort_keys=True, separators=(",", ":")))
        if failures:
            self.exit_code = 1


class CmdThreePoint(GroupCommand):
    """
    Count a length-three integral

    Usage:
      three-point --group <z2z2|a4|s4> <class> <class> <class>

    Prints <c1 c2 c3>, the number of triples in the three classes with
    product one, over the group order. Class names are one, z1 z2 z3
    (z2z2), s1 s2 zeta (a4) and tau sigma rho zeta (s4).
    """
    key = "three-point"
    aliases = ["3pt"]
    help_category = "groups"

    @classmethod
    def add_arguments(cls, parser):
        super(CmdThreePoint, cls).add_arguments(parser)
        parser.add_argument("classes", nargs=3, metavar="class")

    def parse(self):
        super(CmdThreePoint, self).parse()
        data = group_table(self.group)
        try:
            self.classes = [data.class_index(token) for token in self.args.classes]
        except KeyError as err:
            raise UsageError(err.args[0])

    def func(self):
        value = three_point(group_table(self.group), *self.classes)
        self.caller.data(rational.to_string(value))
