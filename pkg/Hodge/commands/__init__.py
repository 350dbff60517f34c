"""
The command line surface: Command base classes, the default cmdset and
the verification suites the `verify` command runs.

"""
