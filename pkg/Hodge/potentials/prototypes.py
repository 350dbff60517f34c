"""
Prototypes

Every closed-form generating function is declared here as a CAPITAL
dictionary, one per formula, and expanded by `potentials.builders`.
Refer to a prototype by its variable name through `proto()`.

Possible keywords are:
    key - short name of the formula.
    desc - what it is the generating function of.
    variables - the series variables, in exponent order.
    classes - the class token each variable counts (omitted for the
        identity sides, which are not integral tables).
    terms - list of h-terms, each a dictionary with
        weight - "p/q", the multiplier.
        phase - "p/q", the point of expansion in units of pi.
        form - variable -> coefficient of the linear form.

A coefficient is either "p/q" or a pair ("p/q", "const const ...")
meaning the rational times the product of the named constants from
`CONSTANTS`. Keeping the formulas as data means each displayed summand
is one line here and one assertion in the tests.

"""

import sys

from Hodge.algebra.cyclotomic import OMEGA, OMEGA_BAR, SQRT3

CONSTANTS = {
    "sqrt3": SQRT3,
    "omega": OMEGA,
    "omegabar": OMEGA_BAR,
}


def proto(proto_str):
    return getattr(sys.modules[__name__], proto_str)


#######################
# Z2xZ2 explicit form #
#######################

EXPLICIT_Z2Z2 = {
    "key": "z2z2",
    "desc": "F of Z2xZ2 as four h-terms at -pi/2 plus (1/2) h(x_k)",
    "variables": ("x1", "x2", "x3"),
    "classes": ("z1", "z2", "z3"),
    "terms": [
        {"weight": "1", "phase": "-1/2", "form": {"x1": "1/2", "x2": "1/2", "x3": "1/2"}},
        {"weight": "1", "phase": "-1/2", "form": {"x1": "-1/2", "x2": "1/2", "x3": "-1/2"}},
        {"weight": "1", "phase": "-1/2", "form": {"x1": "1/2", "x2": "-1/2", "x3": "-1/2"}},
        {"weight": "1", "phase": "-1/2", "form": {"x1": "-1/2", "x2": "-1/2", "x3": "1/2"}},
        {"weight": "1/2", "phase": "0", "form": {"x1": "1"}},
        {"weight": "1/2", "phase": "0", "form": {"x2": "1"}},
        {"weight": "1/2", "phase": "0", "form": {"x3": "1"}},
    ],
}

####################
# A4 explicit form #
####################

# the three forms W = (x1 + x2)/sqrt3, (omega x1 + omegabar x2)/sqrt3,
# (omegabar x1 + omega x2)/sqrt3
_W = (
    {"x1": ("1/3", "sqrt3"), "x2": ("1/3", "sqrt3")},
    {"x1": ("1/3", "omega sqrt3"), "x2": ("1/3", "omegabar sqrt3")},
    {"x1": ("1/3", "omegabar sqrt3"), "x2": ("1/3", "omega sqrt3")},
)


def _shifted(form, **extra):
    result = dict(form)
    result.update(extra)
    return result


EXPLICIT_A4 = {
    "key": "a4",
    "desc": "F of A4 as eleven h-terms in the forms W, +-x3/2 and x3",
    "variables": ("x1", "x2", "x3"),
    "classes": ("s1", "s2", "zeta"),
    "terms": [term for w in _W for term in (
        {"weight": "1", "phase": "-5/6", "form": _shifted(w, x3="1/2")},
        {"weight": "2", "phase": "-1/3", "form": dict(w)},
        {"weight": "1", "phase": "1/6", "form": _shifted(w, x3="-1/2")},
    )] + [
        {"weight": "4", "phase": "1/2", "form": {"x3": "1/2"}},
        {"weight": "1/2", "phase": "0", "form": {"x3": "1"}},
    ],
}

######################
# S4 sigma-zeta part #
######################

KERNEL_FS4 = {
    "key": "kernel",
    "desc": "the kernel K(u, v) of the S4 section",
    "variables": ("u", "v"),
    "terms": [
        {"weight": "1", "phase": "-5/6", "form": {"u": ("1/3", "sqrt3"), "v": "1/2"}},
        {"weight": "2", "phase": "-1/3", "form": {"u": ("1/3", "sqrt3")}},
        {"weight": "1", "phase": "1/6", "form": {"u": ("1/3", "sqrt3"), "v": "-1/2"}},
        {"weight": "2", "phase": "1/2", "form": {"v": "1/2"}},
        {"weight": "2/3", "phase": "3/2", "form": {"v": "1/2"}},
    ],
}

SECTION_S4 = {
    "key": "s4",
    "desc": "F of S4 restricted to the sigma and zeta directions, (1/2) K(2u, v) + K(-u, v)",
    "variables": ("u", "v"),
    "classes": ("sigma", "zeta"),
    "kernel": "KERNEL_FS4",
    # (weight, scaling of u, scaling of v)
    "compose": [("1/2", "2", "1"), ("1", "-1", "1")],
}

FS4_SIGMA_LINE = {
    "key": "s4-sigma",
    "desc": "F of S4 along sigma alone",
    "variables": ("x",),
    "classes": ("sigma",),
    "terms": [
        {"weight": "1/8", "phase": "-2/3", "form": {"x": ("4/3", "sqrt3")}},
        {"weight": "1", "phase": "-1/3", "form": {"x": ("2/3", "sqrt3")}},
        {"weight": "1/4", "phase": "-2/3", "form": {"x": ("-2/3", "sqrt3")}},
        {"weight": "2", "phase": "-1/3", "form": {"x": ("-1/3", "sqrt3")}},
    ],
}

X0_SERIES = {
    "key": "x0",
    "desc": "X0(u), the zeta-only part of the S4 section",
    "variables": ("u",),
    "classes": ("zeta",),
    "terms": [
        {"weight": "1/6", "phase": "-1/2", "form": {"u": "3/2"}},
        {"weight": "1/2", "phase": "1/2", "form": {"u": "1/2"}},
        {"weight": "1/4", "phase": "0", "form": {"u": "1"}},
    ],
}

#######################
# Trig identity sides #
#######################

TRIG_TRIPLE = {
    "key": "triple",
    "desc": "(1/9) h(3u) = h(u) + h(u + 2pi/3) + h(u - 2pi/3)",
    "variables": ("u",),
    "lhs": [
        {"weight": "1/9", "phase": "0", "form": {"u": "3"}},
    ],
    "rhs": [
        {"weight": "1", "phase": "0", "form": {"u": "1"}},
        {"weight": "1", "phase": "2/3", "form": {"u": "1"}},
        {"weight": "1", "phase": "-2/3", "form": {"u": "1"}},
    ],
}

TRIG_DOUBLE = {
    "key": "double",
    "desc": "(1/4) h(2u) = h(u + pi/2) + h(u - pi/2)",
    "variables": ("u",),
    "lhs": [
        {"weight": "1/4", "phase": "0", "form": {"u": "2"}},
    ],
    "rhs": [
        {"weight": "1", "phase": "1/2", "form": {"u": "1"}},
        {"weight": "1", "phase": "-1/2", "form": {"u": "1"}},
    ],
}
