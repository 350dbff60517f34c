"""
Tests for the launcher, the commands and the verification suites.

"""

import io
import json
import os
import tempfile
import time
from fractions import Fraction

import mock
from twisted.trial.unittest import SynchronousTestCase

from Hodge import launcher
from Hodge.commands import suites
from Hodge.commands.command import Command, Console, check_order
from Hodge.commands.default_cmdsets import HodgeCmdSet
from Hodge.commands.hodge_cmds import CmdExpand, CmdThreePoint, CmdVerify
from Hodge.potentials.table import table_from_csv, table_from_json
from Hodge.utils.errors import PoleError, UsageError


def _run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = launcher.main(list(argv), stdout, stderr)
    return code, stdout.getvalue(), stderr.getvalue()


class TestCmdSet(SynchronousTestCase):

    def test_commands(self):
        cmdset = HodgeCmdSet()
        self.assertEqual([cmd.key for cmd in cmdset.commands], ["expand", "verify", "three-point"])
        self.assertIs(cmdset.get("3pt"), CmdThreePoint)
        self.assertIs(cmdset.get("check"), CmdVerify)
        self.assertIsNone(cmdset.get("look"))

    def test_add_replaces(self):
        cmdset = HodgeCmdSet()
        cmdset.add(CmdExpand)
        self.assertEqual(len(cmdset.commands), 3)


class TestCommand(SynchronousTestCase):

    def test_hooks(self):
        calls = []

        class CmdRecorder(Command):
            key = "record"

            def at_pre_cmd(self):
                calls.append("pre")

            def parse(self):
                calls.append("parse")

            def func(self):
                calls.append("func")

            def at_post_cmd(self):
                calls.append("post")

        self.assertEqual(CmdRecorder(Console(io.StringIO(), io.StringIO()), None).execute(), 0)
        self.assertEqual(calls, ["pre", "parse", "func", "post"])

    def test_abort(self):
        caller = mock.Mock()

        class CmdAbort(Command):
            key = "abort"
            func = mock.Mock()

            def at_pre_cmd(self):
                return True

        self.assertEqual(CmdAbort(caller, None).execute(), 0)
        self.assertFalse(CmdAbort.func.called)

    def test_errors(self):
        caller = mock.Mock()

        class CmdBroken(Command):
            key = "broken"

            def func(self):
                raise PoleError("tan at pi/2")

        self.assertEqual(CmdBroken(caller, None).execute(), 1)
        caller.msg.assert_called_once_with("broken: PoleError: tan at pi/2")

    def test_check_order(self):
        self.assertEqual(check_order(None), 10)
        self.assertEqual(check_order(3), 3)
        self.assertRaises(UsageError, check_order, 2)
        with mock.patch("Hodge.conf.settings.MAX_ORDER", 5):
            self.assertRaises(UsageError, check_order, 6)

    def test_console_out(self):
        path = os.path.join(tempfile.mkdtemp(), "table.json")
        stdout = io.StringIO()
        Console(stdout, io.StringIO(), path).data("{}")
        with io.open(path, encoding="utf-8") as stream:
            self.assertEqual(stream.read(), "{}\n")
        self.assertEqual(stdout.getvalue(), "")

    def test_console_bad_out(self):
        path = os.path.join(tempfile.mkdtemp(), "missing", "table.json")
        self.assertRaises(UsageError, Console(io.StringIO(), io.StringIO(), path).data, "{}")


class TestExpand(SynchronousTestCase):

    def test_z2z2(self):
        code, out, err = _run("expand", "--group", "z2z2", "--order", "4")
        self.assertEqual(code, 0)
        self.assertIn('{"insertions":{"z1":1,"z2":1,"z3":1},"value":"1/4"}', out)
        self.assertIn('{"insertions":{"z1":4},"value":"-1/4"}', out)
        self.assertIn("Z2xZ2", err)
        values = table_from_json(out)
        self.assertEqual(values, suites.closed_table("Z2xZ2", 4))
        self.assertEqual(values[(2, 2, 0)], Fraction(-1, 8))

    def test_a4(self):
        code, out, _ = _run("expand", "--group", "a4", "--order", "3")
        self.assertEqual(code, 0)
        self.assertIn('{"insertions":{"s1":3},"value":"4/3"}', out)

    def test_deterministic(self):
        self.assertEqual(_run("table", "--group", "a4", "--order", "4")[1],
                         _run("expand", "--group", "a4", "--order", "4")[1])

    def test_csv(self):
        code, out, _ = _run("expand", "--group", "s4", "--order", "4", "--format", "csv")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("group,tau,sigma,rho,zeta,value\n"))
        values = table_from_csv(out)
        self.assertEqual(values, suites.closed_table("S4", 4))
        self.assertEqual(values[(1, 0, 1, 1)], Fraction(1, 2))

    def test_routes_agree(self):
        closed = _run("expand", "--group", "z2z2", "--order", "5")[1]
        self.assertEqual(_run("expand", "--group", "z2z2", "--order", "5", "--route", "recursion")[1], closed)

    def test_bad_flags(self):
        self.assertEqual(_run("expand", "--group", "d4")[0], 2)
        self.assertEqual(_run("expand", "--group", "a4", "--order", "2")[0], 2)
        self.assertEqual(_run("expand")[0], 2)
        with mock.patch("Hodge.conf.settings.MAX_ORDER", 6):
            code, _, err = _run("expand", "--group", "a4", "--order", "7")
        self.assertEqual(code, 2)
        self.assertIn("between 3 and 6", err)

    def test_no_command(self):
        self.assertEqual(_run()[0], 2)

    def test_unwritable_out(self):
        path = os.path.join(tempfile.mkdtemp(), "missing", "table.json")
        code, out, err = _run("expand", "--group", "s4", "--order", "4", "--out", path)
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn(path, err)
        self.assertNotIn("Traceback", err)


class TestThreePoint(SynchronousTestCase):

    def test_values(self):
        self.assertEqual(_run("three-point", "--group", "s4", "zeta", "zeta", "one")[:2], (0, "1/8\n"))
        self.assertEqual(_run("three-point", "--group", "a4", "s1", "s2", "zeta")[:2], (0, "1\n"))
        self.assertEqual(_run("3pt", "--group", "z2z2", "z1", "z1", "z2")[:2], (0, "0\n"))

    def test_unknown_class(self):
        code, out, err = _run("three-point", "--group", "a4", "s1", "s2", "tau")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("tau", err)

    def test_wrong_arity(self):
        self.assertEqual(_run("three-point", "--group", "a4", "s1", "s2")[0], 2)


class TestVerify(SynchronousTestCase):

    def test_trig(self):
        code, out, err = _run("verify", "--check", "trig", "--order", "4")
        self.assertEqual(code, 0)
        self.assertEqual(out, "")
        self.assertEqual(err.count("PASS"), 4)
        self.assertIn("4 checks, 0 failed", err)

    def test_failure_exit_code(self):
        def failing(report, order):
            report.check("always fails", lambda: (False, "on purpose"))
        with mock.patch.dict(suites.SUITES, {"trig": failing}):
            code, _, err = _run("verify", "--check", "trig", "--order", "4")
        self.assertEqual(code, 1)
        self.assertIn("FAIL always fails (on purpose)", err)

    def test_error_is_failure(self):
        def raising():
            raise PoleError("tan at pi/2")
        report = suites.SuiteReport()
        self.assertFalse(report.check("raises", raising))
        self.assertEqual(report.results[0].detail, "PoleError: tan at pi/2")

    def test_recursion(self):
        code, out, err = _run("verify", "--check", "recursion", "--order", "6")
        self.assertEqual(code, 0, err)
        payload = json.loads(out)
        self.assertEqual(sorted(payload["recursion"]), ["A4", "S4", "Z2xZ2"])
        self.assertIn("PASS route A4", err)
        self.assertIn("PASS S4 branch and leading coefficients (roots -1/3, 1, alphas 4 and 6)", err)
        self.assertNotIn("Fraction", err)

    def test_specializations(self):
        report = suites.run_suite("specializations", 6)
        self.assertTrue(report.passed, [result.line() for result in report.failures()])

    def test_theorem1(self):
        report = suites.run_suite("theorem1", 5)
        self.assertTrue(report.passed, [result.line() for result in report.failures()])

    def test_wdvv(self):
        report = suites.run_suite("wdvv", 5)
        self.assertTrue(report.passed, [result.line() for result in report.failures()])

    def test_full_run_within_budget(self):
        started = time.time()
        report = suites.run_suite("all", 10)
        elapsed = time.time() - started
        self.assertTrue(report.passed, [result.line() for result in report.failures()])
        self.assertTrue(elapsed < 60, "all suites at order 10 took %.1f s" % elapsed)
