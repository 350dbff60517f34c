"""
Integral tables

A `HurwitzTable` maps exponent vectors over a fixed list of classes to
the rational integrals <c1 ... cn>. Tables are what the two routes
produce and what gets compared, serialised and parsed back.

Serialised forms:

    JSON - {"group": ..., "order": N, "integrals": [{"insertions":
           {token: count, ...}, "value": "p/q"}, ...]}, compact
           separators, entries in lexicographic exponent order, zero
           exponents left out of "insertions".
    CSV  - header "group,<token>,...,value", one row per entry.

"""

import csv
import io
import json
from fractions import Fraction

from Hodge.algebra import rational
from Hodge.algebra.series import monomials
from Hodge.mckay.groups import group_table, monodromy_vanishes
from Hodge.utils.errors import MonodromyViolation


class HurwitzTable(object):
    """
    Integrals of one group over a list of classes.

    Args:
        group (str): "Z2xZ2", "A4" or "S4".
        classes (iterable): Class tokens, one per exponent position.
        order (int): Largest length held.
        entries (dict, optional): Exponent tuple -> rational.

    """

    def __init__(self, group, classes, order, entries=None):
        self.group = group
        self.classes = tuple(classes)
        self.order = order
        self.entries = {}
        for exps, value in (entries or {}).items():
            self[exps] = value

    def __setitem__(self, exps, value):
        exps = tuple(exps)
        if len(exps) != len(self.classes):
            raise ValueError("%r does not fit classes %r" % (exps, self.classes))
        self.entries[exps] = Fraction(value)

    def __getitem__(self, exps):
        return self.entries[tuple(exps)]

    def __contains__(self, exps):
        return tuple(exps) in self.entries

    def __len__(self):
        return len(self.entries)

    def get(self, exps, default=None):
        return self.entries.get(tuple(exps), default)

    def items(self):
        """Entries in lexicographic exponent order."""
        return sorted(self.entries.items())

    def full_exponents(self, exps):
        """Exponents over all classes of the group, trivial class first."""
        data = group_table(self.group)
        full = [0] * len(data.class_names)
        for token, count in zip(self.classes, exps):
            full[data.class_index(token)] += count
        return tuple(full)

    def vanishes(self, exps):
        """Whether the monodromy condition kills this entry."""
        return monodromy_vanishes(group_table(self.group), self.full_exponents(exps))

    def differences(self, other, order=None):
        """
        Exponent vectors, through `order`, on which the tables disagree.
        Absent entries count as zero.

        """
        order = min(self.order, other.order) if order is None else order
        keys = set(self.entries) | set(other.entries)
        return sorted(exps for exps in keys
                      if sum(exps) <= order and self.entries.get(exps, 0) != other.entries.get(exps, 0))

    def __eq__(self, other):
        if not isinstance(other, HurwitzTable):
            return NotImplemented
        return (self.group == other.group and self.classes == other.classes
                and self.order == other.order and self.entries == other.entries)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "<HurwitzTable %s (%s) order=%d entries=%d>" % (
            self.group, ",".join(self.classes), self.order, len(self.entries))

    # serialisation

    def to_dict(self):
        integrals = []
        for exps, value in self.items():
            insertions = dict((token, count) for token, count in zip(self.classes, exps) if count)
            integrals.append({"insertions": insertions, "value": rational.to_string(value)})
        return {"group": self.group, "order": self.order, "integrals": integrals}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_csv(self):
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(("group",) + self.classes + ("value",))
        for exps, value in self.items():
            writer.writerow((self.group,) + exps + (rational.to_string(value),))
        return stream.getvalue()


def extract_table(series, group, classes, low=3):
    """
    Read every integral of length `low`..order off a generating function.

    Args:
        series (MultiSeries): The potential; its variables count
            `classes` in order.
        group (str): The group.
        classes (iterable): Class token per series variable.
        low (int, optional): Shortest length to include.

    Returns:
        table (HurwitzTable): All integrals, zeros included.

    Raises:
        NotRational: If a coefficient is irrational.
        MonodromyViolation: If a monodromy-forbidden integral is nonzero.

    """
    table = HurwitzTable(group, classes, series.order)
    for exps in monomials(len(series.variables), series.order, low):
        value = series.integral_coefficient(exps)
        if value and table.vanishes(exps):
            raise MonodromyViolation("%s integral %r is %s but should vanish" % (group, exps, value))
        table[exps] = value
    return table


def table_from_dict(data, classes=None):
    """
    Rebuild a table from `HurwitzTable.to_dict` output.

    Args:
        data (dict): The parsed JSON.
        classes (iterable, optional): Class order; defaults to the
            nontrivial classes of the group.

    """
    group = data["group"]
    if classes is None:
        classes = group_table(group).class_names[1:]
    table = HurwitzTable(group, classes, int(data["order"]))
    for integral in data["integrals"]:
        exps = tuple(int(integral["insertions"].get(token, 0)) for token in table.classes)
        table[exps] = rational.parse(integral["value"])
    return table


def table_from_json(text, classes=None):
    """Parse `HurwitzTable.to_json` output."""
    return table_from_dict(json.loads(text), classes)


def table_from_csv(text, order=None):
    """
    Parse `HurwitzTable.to_csv` output. The order defaults to the
    longest entry.

    """
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    classes = header[1:-1]
    rows = list(reader)
    if not rows:
        return HurwitzTable(None, classes, order or 0)
    entries = {}
    for row in rows:
        exps = tuple(int(value) for value in row[1:-1])
        entries[exps] = rational.parse(row[-1])
    if order is None:
        order = max(sum(exps) for exps in entries)
    return HurwitzTable(rows[0][0], classes, order, entries)
