"""
Command sets

All commands must be grouped in a cmdset. The launcher builds its
sub-commands from `HodgeCmdSet`; to add a command, write it in
`hodge_cmds.py` and add it in `at_cmdset_creation` below.

"""

from Hodge.commands.hodge_cmds import CmdExpand, CmdThreePoint, CmdVerify


class CmdSet(object):
    """
    An ordered collection of command classes, looked up by key or alias.
    """
    key = "Unnamed CmdSet"

    def __init__(self):
        self.commands = []
        self.at_cmdset_creation()

    def at_cmdset_creation(self):
        """
        Populates the cmdset
        """
        pass

    def add(self, cmdclass):
        self.commands = [cmd for cmd in self.commands if cmd.key != cmdclass.key]
        self.commands.append(cmdclass)

    def get(self, name):
        for cmdclass in self.commands:
            if name == cmdclass.key or name in cmdclass.aliases:
                return cmdclass
        return None


class HodgeCmdSet(CmdSet):
    """
    The commands of the `hodge` launcher.
    """
    key = "DefaultHodge"

    def at_cmdset_creation(self):
        """
        Populates the cmdset
        """
        self.add(CmdExpand)
        self.add(CmdVerify)
        self.add(CmdThreePoint)
