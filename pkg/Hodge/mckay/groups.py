"""
Groups

The three groups are realised as permutation groups on four letters
with sympy. Classes, centralisers, the inverse-class involution, the
characters and the derived subgroup are all computed from the
permutations; only the class representatives and the order of the
irreps are fixed by hand, in `GROUPS` below.

Class names double as the command line tokens:

    Z2xZ2 - one z1 z2 z3
    A4    - one s1 s2 zeta
    S4    - one tau sigma rho zeta

"""

from fractions import Fraction
from functools import lru_cache

from sympy.combinatorics import Permutation, PermutationGroup

from Hodge.algebra.cyclotomic import OMEGA, ONE, CycNumber, sqrt_int
from Hodge.utils.errors import UnsupportedGroup

LETTERS = 4
_PAIRINGS = (frozenset([frozenset([0, 1]), frozenset([2, 3])]),
             frozenset([frozenset([0, 2]), frozenset([1, 3])]),
             frozenset([frozenset([0, 3]), frozenset([1, 2])]))

######################################################################
# Class representatives, as cycle lists on 0..3
######################################################################

GROUPS = {
    "Z2xZ2": {
        "classes": (("one", []),
                    ("z1", [[0, 1], [2, 3]]),
                    ("z2", [[0, 2], [1, 3]]),
                    ("z3", [[0, 3], [1, 2]])),
        "irreps": ("trivial", "chi1", "chi2", "chi3"),
    },
    "A4": {
        "classes": (("one", []),
                    ("s1", [[0, 1, 2]]),
                    ("s2", [[0, 2, 1]]),
                    ("zeta", [[0, 1], [2, 3]])),
        # chain order of the E6 white nodes: end, middle, end
        "irreps": ("trivial", "omega", "standard", "omegabar"),
    },
    "S4": {
        "classes": (("one", []),
                    ("tau", [[0, 1]]),
                    ("sigma", [[0, 1, 2]]),
                    ("rho", [[0, 1, 2, 3]]),
                    ("zeta", [[0, 1], [2, 3]])),
        "irreps": ("trivial", "sign", "two", "standard", "rotation"),
    },
}


def _perm(cycles):
    if not cycles:
        return Permutation(list(range(LETTERS)))
    return Permutation(cycles, size=LETTERS)


def _fixed_points(perm):
    return sum(1 for letter, image in enumerate(perm.array_form) if letter == image)


def _pairing_fixed(perm):
    image = perm.array_form
    return sum(1 for pairing in _PAIRINGS
               if frozenset(frozenset(image[letter] for letter in pair) for pair in pairing) == pairing)


def _compose(left, right):
    """Array form of 'apply right, then left'."""
    return tuple(left[letter] for letter in right)


class GroupData(object):
    """
    Classes, centralisers and characters of one of the three groups.

    Args:
        name (str): "Z2xZ2", "A4" or "S4".

    Attributes:
        name (str): The group.
        order (int): |G|.
        elements (list): The permutations, sorted by array form.
        class_names (tuple): Class tokens, trivial class first.
        representatives (list): One permutation per class.
        classes (list): Per class, the frozenset of array forms.
        class_sizes (list): |class_i|.
        class_orders (tuple): Element order of each class.
        z (list): Centraliser orders z_i = |G| / |class_i|.
        inverse (list): The involution i -> i-bar on class indices.
        irrep_names (tuple): Irreps, trivial first.
        char_table (list): char_table[rho][i] as CycNumbers.
        dims (list): Irrep dimensions.
        chi_V (list): Character of the rotation representation on R^3,
            sign(g) * (fixed points - 1), per class.

    """

    def __init__(self, name):
        if name not in GROUPS:
            raise UnsupportedGroup("unknown group %r" % name)
        spec = GROUPS[name]
        self.name = name
        self.class_names = tuple(token for token, _ in spec["classes"])
        self.representatives = [_perm(cycles) for _, cycles in spec["classes"]]
        self.class_orders = tuple(int(rep.order()) for rep in self.representatives)
        self._group = PermutationGroup(self.representatives)
        self.elements = sorted(self._group.generate(), key=lambda perm: perm.array_form)
        self.order = len(self.elements)

        self.classes = []
        for rep in self.representatives:
            self.classes.append(frozenset(tuple((rep ^ other).array_form) for other in self.elements))
        self.class_sizes = [len(members) for members in self.classes]
        assert sum(self.class_sizes) == self.order, "classes of %s do not partition the group" % name
        self._class_of = {}
        for index, members in enumerate(self.classes):
            for member in members:
                self._class_of[member] = index
        self.z = [self.order // size for size in self.class_sizes]
        self.inverse = [self._class_of[tuple((~rep).array_form)] for rep in self.representatives]

        self.derived = frozenset(tuple(perm.array_form) for perm in self._group.derived_subgroup().generate())
        self.irrep_names = spec["irreps"]
        characters = self._characters()
        self.char_table = [[CycNumber.coerce(characters[irrep](rep)) for rep in self.representatives]
                           for irrep in self.irrep_names]
        self.dims = [row[0].as_rational().numerator for row in self.char_table]
        self.chi_V = [rep.signature() * (_fixed_points(rep) - 1) for rep in self.representatives]

    def _characters(self):
        def trivial(perm):
            return ONE

        if self.name == "Z2xZ2":
            def linear(index):
                kernel = (tuple(range(LETTERS)), tuple(self.representatives[index].array_form))
                return lambda perm: 1 if tuple(perm.array_form) in kernel else -1
            return {"trivial": trivial, "chi1": linear(1), "chi2": linear(2), "chi3": linear(3)}

        if self.name == "A4":
            generator = self.representatives[1]

            def omega(perm):
                # A4 / V4 is cyclic of order 3, generated by the coset of s1
                value, power = ONE, Permutation(list(range(LETTERS)))
                for _ in range(3):
                    if tuple((perm * ~power).array_form) in self.derived:
                        return value
                    value, power = value * OMEGA, power * generator
                raise AssertionError("%r is in no coset of the derived subgroup" % perm)

            return {"trivial": trivial,
                    "omega": omega,
                    "standard": lambda perm: _fixed_points(perm) - 1,
                    "omegabar": lambda perm: omega(perm).conjugate()}

        return {"trivial": trivial,
                "sign": lambda perm: perm.signature(),
                "two": lambda perm: _pairing_fixed(perm) - 1,
                "standard": lambda perm: _fixed_points(perm) - 1,
                "rotation": lambda perm: perm.signature() * (_fixed_points(perm) - 1)}

    @property
    def nontrivial(self):
        """Indices of the nontrivial classes."""
        return list(range(1, len(self.class_names)))

    def class_index(self, token):
        """
        Index of a class by its token.

        Raises:
            KeyError: If the token names no class of this group.

        """
        try:
            return self.class_names.index(token)
        except ValueError:
            raise KeyError("%s has no class %r (classes: %s)" % (self.name, token, " ".join(self.class_names)))

    def class_of(self, perm):
        return self._class_of[tuple(perm.array_form)]

    def __repr__(self):
        return "<GroupData %s order=%d classes=%s>" % (self.name, self.order, ",".join(self.class_names))


@lru_cache(maxsize=None)
def group_table(name):
    """
    The data of one of the three groups, built once.

    Args:
        name (str): "Z2xZ2", "A4" or "S4".

    Returns:
        group (GroupData): The populated data.

    Raises:
        UnsupportedGroup: For any other name.

    """
    return GroupData(name)


@lru_cache(maxsize=None)
def _three_point(name, classes):
    group = group_table(name)
    first, second, third = (group.classes[index] for index in classes)
    identity = tuple(range(LETTERS))
    count = 0
    for g1 in first:
        for g2 in second:
            g12 = _compose(g1, g2)
            for g3 in third:
                if _compose(g12, g3) == identity:
                    count += 1
    return Fraction(count, group.order)


def three_point(group, c1, c2, c3):
    """
    The length-three integral

        <c1 c2 c3> = #{(g1, g2, g3) in c1 x c2 x c3 : g1 g2 g3 = 1} / |G|.

    Args:
        group (GroupData): The group.
        c1, c2, c3 (int): Class indices.

    Returns:
        value (Fraction): The count over |G|.

    """
    return _three_point(group.name, tuple(sorted((c1, c2, c3))))


@lru_cache(maxsize=None)
def _abelian_image_trivial(name, residues):
    group = group_table(name)
    element = tuple(range(LETTERS))
    for rep, power in zip(group.representatives, residues):
        for _ in range(power):
            element = _compose(element, tuple(rep.array_form))
    return element in group.derived


def monodromy_vanishes(group, exponents):
    """
    Whether the insertions can never multiply to the identity, read in
    the abelianisation G / [G, G]: Z2xZ2 needs n1 = n2 = n3 (mod 2), A4
    needs a1 = a2 (mod 3) and S4 an even number of tau and rho.

    Args:
        group (GroupData): The group.
        exponents (sequence): Class counts, either over the nontrivial
            classes or over all classes.

    Returns:
        vanishes (bool): True when the integral is forced to be zero.

    """
    exponents = tuple(exponents)
    if len(exponents) == len(group.class_names) - 1:
        exponents = (0,) + exponents
    elif len(exponents) != len(group.class_names):
        raise ValueError("%s takes %d or %d exponents, got %r"
                         % (group.name, len(group.class_names) - 1, len(group.class_names), exponents))
    residues = tuple(count % order for order, count in zip(group.class_orders, exponents))
    return not _abelian_image_trivial(group.name, residues)


def l_matrix(group):
    """
    The modified character table

        L[i][rho] = (1/z_i) sqrt(3 - chi_V(i)) chi_rho(i)

    over the nontrivial classes i and the nontrivial irreps rho.

    Args:
        group (GroupData): Z2xZ2 or A4.

    Returns:
        matrix (list): Rows per nontrivial class, CycNumber entries.

    Raises:
        UnsupportedGroup: For S4, which is not a subgroup of SU(2)
            covered by the root-system formula.

    """
    if group.name not in ("Z2xZ2", "A4"):
        raise UnsupportedGroup("the L-matrix is defined for Z2xZ2 and A4, not %s" % group.name)
    matrix = []
    for index in group.nontrivial:
        scale = sqrt_int(3 - group.chi_V[index]) * Fraction(1, group.z[index])
        matrix.append([group.char_table[irrep][index] * scale for irrep in range(1, len(group.irrep_names))])
    return matrix


def two_point_pairing(group):
    """
    The pairing g_ij = [i = j-bar] / z_i and its inverse g^ij = z_i [i = j-bar],
    over all classes.

    Returns:
        pairing, inverse (tuple): Two square lists of Fractions.

    """
    size = len(group.class_names)
    pairing = [[Fraction(int(group.inverse[j] == i), group.z[i]) for j in range(size)] for i in range(size)]
    inverse = [[Fraction(group.z[i] * int(group.inverse[j] == i)) for j in range(size)] for i in range(size)]
    return pairing, inverse
