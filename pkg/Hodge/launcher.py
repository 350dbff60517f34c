"""
Hodge launcher

The `hodge` program. One argparse sub-command is built per command in
`HodgeCmdSet`, from the command's key, aliases, docstring and
`add_arguments`. Exit codes: 0 success, 1 failed verification or
computation, 2 bad usage.

    hodge expand --group a4 --order 6
    hodge verify --check recursion --order 8
    hodge three-point --group s4 zeta zeta one

"""

import argparse
import sys

from Hodge import __version__
from Hodge.commands.command import Console
from Hodge.commands.default_cmdsets import HodgeCmdSet
from Hodge.conf import settings
from Hodge.utils.errors import UsageError
from Hodge.utils.logger import start_console_logging


class _ArgumentParser(argparse.ArgumentParser):
    """Raise UsageError instead of exiting, so main() owns the exit code."""

    def error(self, message):
        raise UsageError("%s: %s" % (self.prog, message))


def build_parser(cmdset):
    """
    The argument parser for every command in `cmdset`.

    Args:
        cmdset (CmdSet): The commands to expose.

    Returns:
        parser (ArgumentParser): Sub-commands store their class under
            the `cmdclass` default.

    """
    parser = _ArgumentParser(prog="hodge", description=__doc__.strip().splitlines()[0],
                             formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="log progress at level %r" % settings.VERBOSE_LOG_LEVEL)
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    for cmdclass in cmdset.commands:
        doc = (cmdclass.__doc__ or "").strip()
        sub = subparsers.add_parser(cmdclass.key, aliases=list(cmdclass.aliases),
                                    help=doc.splitlines()[0] if doc else None, description=doc,
                                    formatter_class=argparse.RawDescriptionHelpFormatter)
        cmdclass.add_arguments(sub)
        sub.set_defaults(cmdclass=cmdclass)
    return parser


def main(argv=None, stdout=None, stderr=None, console_logging=False):
    """
    Parse `argv` and run one command.

    Args:
        argv (list, optional): Arguments without the program name.
        stdout, stderr (file, optional): Data and report streams.
        console_logging (bool, optional): Attach the console log
            observer; only the process entry point sets this.

    Returns:
        exit_code (int): 0, 1 or 2.

    """
    stderr = stderr or sys.stderr
    parser = build_parser(HodgeCmdSet())
    try:
        args = parser.parse_args(argv)
    except UsageError as err:
        stderr.write("%s\n" % err)
        return err.exit_code
    except SystemExit as exc:
        # --help and --version
        return exc.code or 0
    if getattr(args, "cmdclass", None) is None:
        stderr.write(parser.format_usage())
        return UsageError.exit_code

    if console_logging:
        level = settings.VERBOSE_LOG_LEVEL if args.verbose else settings.LOG_LEVEL
        start_console_logging(level, stderr)
    caller = Console(stdout, stderr, getattr(args, "out", None))
    return args.cmdclass(caller, args, args.command).execute()


def run():
    """Process entry point of the installed script."""
    sys.exit(main(sys.argv[1:], console_logging=True))


if __name__ == "__main__":
    run()
