"""
Root systems

The D4 and E6 root systems attached by the McKay correspondence to the
binary groups over Z2xZ2 and A4. Positive roots are found by closing
the simple roots under simple reflections; the Cartan matrices are
integer numpy arrays.

Node order and colouring:

    D4 - centre, outer1, outer2, outer3. The three outer nodes are
         white and carry the characters chi1, chi2, chi3 of Z2xZ2.
    E6 - end1, inner1, middle, inner2, end2, branch, with the chain
         end1-inner1-middle-inner2-end2 and the branch on the middle.
         The ends and the middle are white: middle carries the standard
         representation of A4 and the ends carry omega and omegabar.

The diagram does not say which end is omega. `positive_roots` takes a
`mirrored` flag that swaps them; the builders try both orientations.

"""

import numpy

from Hodge.utils.errors import RootNotFound

######################################################################
# Diagrams
######################################################################

DIAGRAMS = {
    "D4": {
        "nodes": ("centre", "outer1", "outer2", "outer3"),
        "edges": ((0, 1), (0, 2), (0, 3)),
        # node -> irrep index of the group
        "white": {1: 1, 2: 2, 3: 3},
        "mirror": {1: 1, 2: 2, 3: 3},
        "group": "Z2xZ2",
    },
    "E6": {
        "nodes": ("end1", "inner1", "middle", "inner2", "end2", "branch"),
        "edges": ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5)),
        "white": {0: 1, 2: 2, 4: 3},
        "mirror": {0: 3, 2: 2, 4: 1},
        "group": "A4",
    },
}


def cartan_matrix(size, edges):
    """The simply laced Cartan matrix 2I - adjacency."""
    cartan = 2 * numpy.eye(size, dtype=int)
    for first, second in edges:
        cartan[first, second] = cartan[second, first] = -1
    return cartan


def reflection_closure(cartan):
    """
    Positive roots of a simply laced root system, as coefficient tuples
    over the simple roots, sorted by height.

    Args:
        cartan (numpy.ndarray): The Cartan matrix.

    Returns:
        roots (list): Tuples of nonnegative integers.

    """
    size = cartan.shape[0]
    simple = [tuple(int(value) for value in row) for row in numpy.eye(size, dtype=int)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        root = frontier.pop()
        for node in range(size):
            image = simple_reflection(cartan, root, node)
            if min(image) >= 0 and any(image) and image not in found:
                found.add(image)
                frontier.append(image)
    return sorted(found, key=lambda root: (sum(root), root))


def simple_reflection(cartan, root, node):
    """s_node(root) = root - <root, alpha_node> alpha_node."""
    root = numpy.array(root, dtype=int)
    image = root.copy()
    image[node] -= root.dot(cartan[:, node])
    return tuple(int(value) for value in image)


class RootSystemData(object):
    """
    Positive roots of D4 or E6 with the white-node labelling.

    Attributes:
        type (str): "D4" or "E6".
        group (str): The group whose irreps label the white nodes.
        nodes (tuple): Node names, in simple-root order.
        cartan (numpy.ndarray): Cartan matrix.
        positive_roots (list): Coefficient tuples, by height.
        node_labels (dict): Node index -> irrep index, or None when black.
        mirrored (bool): Whether the two E6 ends were swapped.

    """

    def __init__(self, type, mirrored=False):
        diagram = DIAGRAMS[type]
        self.type = type
        self.group = diagram["group"]
        self.nodes = diagram["nodes"]
        self.mirrored = mirrored
        self.cartan = cartan_matrix(len(self.nodes), diagram["edges"])
        self.positive_roots = reflection_closure(self.cartan)
        white = diagram["mirror"] if mirrored else diagram["white"]
        self.node_labels = dict((node, white.get(node)) for node in range(len(self.nodes)))
        # white node per irrep index 1, 2, ...
        self._white_nodes = [node for _, node in sorted((irrep, node) for node, irrep in white.items())]
        self._roots = frozenset(self.positive_roots)

    @property
    def highest_root(self):
        return self.positive_roots[-1]

    def white_coordinates(self, root):
        """
        The coefficients of `root` at the white nodes, in irrep order.

        Raises:
            RootNotFound: If `root` is not a positive root.

        """
        root = tuple(root)
        if root not in self._roots:
            raise RootNotFound("%r is not a positive root of %s" % (root, self.type))
        return tuple(root[node] for node in self._white_nodes)

    def __repr__(self):
        return "<RootSystemData %s roots=%d%s>" % (self.type, len(self.positive_roots),
                                                   " mirrored" if self.mirrored else "")


def positive_roots(type, mirrored=False):
    """
    Build the root-system data of D4 or E6.

    Args:
        type (str): "D4" or "E6".
        mirrored (bool, optional): Swap the omega and omegabar ends of E6.

    Returns:
        data (RootSystemData): Roots and labels.

    Raises:
        KeyError: For any other type.

    """
    if type not in DIAGRAMS:
        raise KeyError("no root system %r (known: %s)" % (type, ", ".join(sorted(DIAGRAMS))))
    return RootSystemData(type, mirrored)


def white_coordinates(data, root):
    """Module-level form of `RootSystemData.white_coordinates`."""
    return data.white_coordinates(root)
