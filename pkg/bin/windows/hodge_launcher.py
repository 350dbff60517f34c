"""
Windows launcher for Hodge. setup.py writes a hodge.bat next to this
file that calls it with the installed interpreter.

"""

from Hodge.launcher import run

if __name__ == "__main__":
    run()
