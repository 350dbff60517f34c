"""
Commands

Commands describe what can be asked of Hodge from the command line.
The launcher finds them through the cmdset in `default_cmdsets.py`
and builds one sub-command per class from its `key`, `aliases` and
docstring.

"""

import io
import sys

from Hodge.conf import settings
from Hodge.utils.errors import HodgeError, UsageError
from Hodge.utils.logger import log_trace


class Console(object):
    """
    The caller of every command.

    `msg` is the human-readable report and goes to stderr; `data` is
    the payload and goes to stdout, or to the --out file when one was
    given.

    Args:
        stdout (file, optional): Data stream.
        stderr (file, optional): Report stream.
        out (str, optional): Path that receives the data instead.

    Raises:
        UsageError: From `data`, when the --out path cannot be written.

    """

    def __init__(self, stdout=None, stderr=None, out=None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.out = out

    def msg(self, text):
        self.stderr.write(text.rstrip("\n") + "\n")

    def data(self, text):
        if not text.endswith("\n"):
            text += "\n"
        if self.out:
            try:
                with io.open(self.out, "w", encoding="utf-8", newline="\n") as stream:
                    stream.write(text)
            except OSError as err:
                raise UsageError("cannot write --out %s: %s" % (self.out, err.strerror or err))
        else:
            self.stdout.write(text)


class Command(object):
    """
    Inherit from this to create a new command.

    Note that the class's `__doc__` string (this text) is used by the
    launcher as the help text of the sub-command, so make sure to
    document consistently there. The first line is the one-line summary.

    Each Command implements the following methods, called in this order
    (only func() is actually required):
        - at_pre_cmd(): If this returns True, execution is aborted.
        - parse(): Should check self.args and store the result on self.
        - func(): Performs the actual work.
        - at_post_cmd(): Extra actions after every command.

    Set `self.exit_code` to report failure without raising.

    """
    key = None
    aliases = []
    help_category = "general"

    def __init__(self, caller, args, cmdstring=None):
        self.caller = caller
        self.args = args
        self.cmdstring = cmdstring or self.key
        self.exit_code = 0

    @classmethod
    def add_arguments(cls, parser):
        """Declare the command's flags on its argparse sub-parser."""
        pass

    def at_pre_cmd(self):
        pass

    def parse(self):
        pass

    def func(self):
        raise NotImplementedError("%s has no func()" % type(self).__name__)

    def at_post_cmd(self):
        pass

    def execute(self):
        """
        Run the hooks in order.

        Returns:
            exit_code (int): 0 on success, the error's exit code when a
                `HodgeError` escapes.

        """
        try:
            if self.at_pre_cmd():
                return self.exit_code
            self.parse()
            self.func()
            self.at_post_cmd()
        except UsageError as err:
            self.caller.msg("%s: %s" % (self.cmdstring, err))
            return err.exit_code
        except HodgeError as err:
            log_trace("{cmd} failed", cmd=self.cmdstring)
            self.caller.msg("%s: %s: %s" % (self.cmdstring, type(err).__name__, err))
            return err.exit_code
        return self.exit_code


class GroupCommand(Command):
    """
    Base for commands that take --group.
    """

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--group", required=True, choices=sorted(settings.GROUP_ALIASES),
                            help="the group: z2z2, a4 or s4")

    def parse(self):
        self.group = settings.GROUP_ALIASES[self.args.group]


def check_order(order):
    """
    Validate --order against the configured limits.

    Raises:
        UsageError: If the order is outside MIN_ORDER..MAX_ORDER.

    """
    if order is None:
        return settings.DEFAULT_ORDER
    if not settings.MIN_ORDER <= order <= settings.MAX_ORDER:
        raise UsageError("--order must lie between %d and %d, got %d"
                         % (settings.MIN_ORDER, settings.MAX_ORDER, order))
    return order
