"""
Hodge - exact Hurwitz-Hodge integrals for the groups Z2xZ2, A4 and S4.

Every integral is computed twice: once from the closed trigonometric
generating functions (including the D4/E6 root-system formula) and once
by WDVV recursion from group-theoretic seed data. The two routes are
compared entry by entry, in exact arithmetic, up to a truncation order.

Sub-packages:
    algebra    - rationals, Q(zeta24), truncated power series, linear solves
    kernel     - the h-series and the tangent expansions behind it
    mckay      - the three permutation groups and the D4/E6 root systems
    potentials - closed-form generating functions and integral tables
    wdvv       - WDVV identities and the three recursion schedules
    commands   - the `hodge` command set (expand, verify, three-point)

"""

import os

_VERSION_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "VERSION.txt")

with open(_VERSION_PATH) as _version_file:
    __version__ = _version_file.read().strip()
