"""
Builders

Expand the prototype formulas into truncated series. Every builder is
pure and cached per (formula, order); the series it returns must not be
modified.

Variables:
    Z2xZ2 and A4  - x1, x2, x3 for the nontrivial classes in order
    S4 section    - u (sigma) and v (zeta)
    one-variable  - x (sigma) for the S4 sigma line, u otherwise

"""

from fractions import Fraction
from functools import lru_cache

from Hodge.algebra import rational
from Hodge.algebra.cyclotomic import CycNumber
from Hodge.kernel.hseries import HTerm, expand_h_terms
from Hodge.mckay.groups import group_table, l_matrix
from Hodge.mckay.roots import positive_roots
from Hodge.potentials.prototypes import CONSTANTS, proto
from Hodge.utils.errors import OrientationMismatch, UnsupportedGroup
from Hodge.utils.logger import log_info, log_warn

EXPLICIT = {
    "Z2xZ2": "EXPLICIT_Z2Z2",
    "A4": "EXPLICIT_A4",
}

ROOT_SYSTEMS = {
    "Z2xZ2": "D4",
    "A4": "E6",
}


def parse_coefficient(spec):
    """
    Read a prototype coefficient, "p/q" or ("p/q", "const ...").

    Returns:
        value (CycNumber): The coefficient.

    """
    if isinstance(spec, str):
        return CycNumber.rational(rational.parse(spec))
    scalar, names = spec
    value = CycNumber.rational(rational.parse(scalar))
    for name in names.split():
        value = value * CONSTANTS[name]
    return value


def proto_terms(specs):
    """HTerms from a list of prototype term dictionaries."""
    return [HTerm(rational.parse(spec["phase"]),
                  dict((name, parse_coefficient(value)) for name, value in spec["form"].items()),
                  rational.parse(spec["weight"]))
            for spec in specs]


def composed_terms(prototype):
    """
    The h-terms of a prototype, expanding a "compose" entry of rescaled
    copies of a kernel when there is one.

    """
    if "compose" not in prototype:
        return proto_terms(prototype["terms"])
    kernel = proto_terms(proto(prototype["kernel"])["terms"])
    variables = prototype["variables"]
    terms = []
    for spec in prototype["compose"]:
        weight, scales = rational.parse(spec[0]), [rational.parse(scale) for scale in spec[1:]]
        scale_of = dict(zip(variables, scales))
        for term in kernel:
            form = dict((name, value * scale_of[name]) for name, value in term.linear_form.items())
            terms.append(HTerm(term.phase, form, term.weight * weight))
    return terms


@lru_cache(maxsize=None)
def build_prototype(key, order):
    """
    Expand the prototype `key` through total degree `order`.

    Args:
        key (str): Name of a prototype, e.g. "EXPLICIT_A4".
        order (int): Truncation.

    Returns:
        series (MultiSeries): The generating function.

    """
    prototype = proto(key)
    log_info("expanding {key} through order {order}", key=key, order=order)
    return expand_h_terms(composed_terms(prototype), prototype["variables"], order)


def build_explicit(group, order):
    """
    The explicit h-term formula for F of Z2xZ2 or A4.

    Args:
        group (str): "Z2xZ2" or "A4".
        order (int): Truncation, at least 3.

    Raises:
        UnsupportedGroup: For S4, whose full potential is not known in
            closed form.

    """
    if group not in EXPLICIT:
        raise UnsupportedGroup("no explicit formula for %s" % group)
    return build_prototype(EXPLICIT[group], order)


def theorem1_terms(group, mirrored=False):
    """
    The root-system formula as h-terms:

        F = 1/2 sum over positive roots alpha of
            h(pi + sum_rho alpha^rho (2 pi dim rho / |G| + sum_i L[i][rho] x_i))

    Args:
        group (str): "Z2xZ2" or "A4".
        mirrored (bool, optional): Use the mirrored E6 labelling.

    Returns:
        terms (list): One HTerm per positive root; roots without white
            support give constant terms.

    """
    if group not in ROOT_SYSTEMS:
        raise UnsupportedGroup("the root-system formula covers Z2xZ2 and A4, not %s" % group)
    data = group_table(group)
    roots = positive_roots(ROOT_SYSTEMS[group], mirrored)
    matrix = l_matrix(data)
    variables = ["x%d" % index for index in data.nontrivial]
    terms = []
    for root in roots.positive_roots:
        white = roots.white_coordinates(root)
        theta = Fraction(1) + sum((Fraction(2 * count * data.dims[irrep + 1], data.order)
                                   for irrep, count in enumerate(white)), Fraction(0))
        form = {}
        for row, name in zip(matrix, variables):
            value = sum((entry * count for entry, count in zip(row, white) if count), CycNumber())
            if value:
                form[name] = value
        terms.append(HTerm(theta, form, Fraction(1, 2)))
    return terms


@lru_cache(maxsize=None)
def build_theorem1(group, order, mirrored=False):
    """Expand `theorem1_terms` through total degree `order`."""
    log_info("expanding the root-system formula of {group} through order {order}",
             group=group, order=order)
    return expand_h_terms(theorem1_terms(group, mirrored), ("x1", "x2", "x3"), order)


def resolve_orientation(order):
    """
    Compare both labellings of the E6 ends with the explicit A4 formula.
    The omega-at-end1 labelling is the one `build_theorem1` uses.

    Returns:
        report (dict): "plain" and "mirror" (whether each matches) and
            "kept" (the orientation in use).

    Raises:
        OrientationMismatch: If neither labelling matches.

    """
    explicit = build_explicit("A4", order)
    report = {
        "plain": build_theorem1("A4", order).equal_through(explicit),
        "mirror": build_theorem1("A4", order, True).equal_through(explicit),
    }
    report["kept"] = "plain"
    if not report["plain"] and not report["mirror"]:
        raise OrientationMismatch("neither E6 labelling reproduces the A4 formula through order %d" % order)
    if not report["plain"]:
        log_warn("E6 labelling with omega at end1 does not reproduce the A4 formula")
    log_info("E6 orientations at order {order}: plain={plain} mirror={mirror}",
             order=order, plain=report["plain"], mirror=report["mirror"])
    return report


def build_s4_section(order):
    """T(u, v) = F_S4(0, u, 0, v) = (1/2) K(2u, v) + K(-u, v)."""
    return build_prototype("SECTION_S4", order)


def build_fs4_closed(order):
    """F_S4(0, x, 0, 0) in closed form."""
    return build_prototype("FS4_SIGMA_LINE", order)


def x0_series(order):
    """X0(u) = T(0, u) in closed form."""
    return build_prototype("X0_SERIES", order)


def specialize(series, assignment, variables):
    """
    Linear specialisation of a potential, e.g. F(x, x, 0).

    Args:
        series (MultiSeries): The potential.
        assignment (dict): Old variable -> {new variable: coefficient};
            variables left out go to zero.
        variables (iterable): The new variables.

    Raises:
        VariableMismatch: If the assignment does not fit the series.

    """
    return series.substitute(assignment, variables)


def specialize_s4_from_a4(order):
    """(1/2) F_A4(u, u, v), which equals the S4 section T(u, v)."""
    a4 = build_explicit("A4", order)
    return specialize(a4, {"x1": {"u": 1}, "x2": {"u": 1}, "x3": {"v": 1}}, ("u", "v")).scale(Fraction(1, 2))


def trig_sides(key, order, shift=0):
    """
    Both sides of a trig identity at the base point u + shift * pi.

    Args:
        key (str): "TRIG_TRIPLE" or "TRIG_DOUBLE".
        order (int): Truncation.
        shift (Fraction, optional): Base point in units of pi.

    Returns:
        lhs, rhs (tuple): Two one-variable series.

    """
    prototype = proto(key)
    shift = Fraction(shift)
    sides = []
    for side in ("lhs", "rhs"):
        terms = []
        for term in proto_terms(prototype[side]):
            scale = term.linear_form["u"].as_rational()
            terms.append(HTerm(term.phase + scale * shift, term.linear_form, term.weight))
        sides.append(expand_h_terms(terms, prototype["variables"], order))
    return tuple(sides)
