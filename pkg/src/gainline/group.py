"""Finite groups as explicit multiplication tables.

Elements are plain integer indices into the group's element list, with the
convention that index 0 is the identity.  All builders return validated
:class:`FiniteGroup` instances.
"""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from .errors import InputError, ValidationError

Element = int

#: Associativity is checked exhaustively up to this order, by sampling above.
ASSOC_EXHAUSTIVE_LIMIT = 64
ASSOC_SAMPLE_COUNT = 10_000

#: Artifact cap on the order of custom tables.
MAX_ORDER = 512


class FiniteGroup:
    """A finite group given by an order x order multiplication table.

    ``mult[a][b]`` is the index of the product of elements ``a`` and ``b``;
    index 0 is always the identity.  Instances are immutable after
    construction and safe to share between threads.
    """

    def __init__(self, labels: Sequence[str], mult: Sequence[Sequence[int]],
                 name: str = "custom"):
        order = len(labels)
        if order == 0:
            raise ValidationError("group must have at least one element")
        if order > MAX_ORDER:
            raise ValidationError(f"group order {order} exceeds cap {MAX_ORDER}")
        if len(set(labels)) != order:
            raise ValidationError("element labels must be unique")
        if len(mult) != order or any(len(row) != order for row in mult):
            raise ValidationError("multiplication table must be square of size order")

        table = tuple(tuple(int(x) for x in row) for row in mult)
        full = list(range(order))
        for a in full:
            if sorted(table[a]) != full:
                raise ValidationError(f"row {a} of the table is not a permutation")
            if sorted(table[b][a] for b in full) != full:
                raise ValidationError(f"column {a} of the table is not a permutation")
        for g in full:
            if table[0][g] != g or table[g][0] != g:
                raise ValidationError("element 0 is not a two-sided identity")

        inv = [-1] * order
        for g in full:
            for h in full:
                if table[g][h] == 0 and table[h][g] == 0:
                    inv[g] = h
                    break
            if inv[g] < 0:
                raise ValidationError(f"element {g} has no two-sided inverse")

        self.name = name
        self.labels = tuple(str(label) for label in labels)
        self.mult = table
        self.inv = tuple(inv)
        self.order = order
        self._label_index = {label: i for i, label in enumerate(self.labels)}
        self._check_associativity()
        self._abelian: bool | None = None

    def _check_associativity(self) -> None:
        n = self.order
        if n <= ASSOC_EXHAUSTIVE_LIMIT:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(ASSOC_SAMPLE_COUNT))
        for a, b, c in triples:
            if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]]:
                raise ValidationError(
                    f"table is not associative at ({a}, {b}, {c})")

    # -- basic operations ---------------------------------------------------

    @property
    def identity(self) -> Element:
        return 0

    def elements(self) -> range:
        return range(self.order)

    def mul(self, g: Element, h: Element) -> Element:
        if not (0 <= g < self.order and 0 <= h < self.order):
            raise ValidationError(f"element index out of range: {g}, {h}")
        return self.mult[g][h]

    def invert(self, g: Element) -> Element:
        if not 0 <= g < self.order:
            raise ValidationError(f"element index out of range: {g}")
        return self.inv[g]

    def label(self, g: Element) -> str:
        return self.labels[g]

    def element(self, label: str) -> Element:
        try:
            return self._label_index[label]
        except KeyError:
            raise InputError(f"unknown element label {label!r} in group {self.name}")

    def is_abelian(self) -> bool:
        if self._abelian is None:
            self._abelian = all(
                self.mult[a][b] == self.mult[b][a]
                for a in range(self.order) for b in range(self.order))
        return self._abelian

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FiniteGroup)
                and self.labels == other.labels and self.mult == other.mult)

    def __hash__(self) -> int:
        return hash((self.labels, self.mult))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


def center(group: FiniteGroup) -> list[Element]:
    """All elements commuting with the whole group, by table scan."""
    return [g for g in group.elements()
            if all(group.mult[g][h] == group.mult[h][g] for h in group.elements())]


def central_weak_involutions(group: FiniteGroup) -> list[Element]:
    """Central elements s with s^2 = 1.  Always contains the identity."""
    return [g for g in center(group) if group.mult[g][g] == 0]


def is_central_weak_involution(group: FiniteGroup, s: Element) -> bool:
    if not 0 <= s < group.order:
        return False
    if group.mult[s][s] != 0:
        return False
    return all(group.mult[s][h] == group.mult[h][s] for h in group.elements())


# -- builders ---------------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    """Z_n with additive labels "0".."n-1"."""
    if n < 1:
        raise InputError("cyclic group needs n >= 1")
    labels = [str(a) for a in range(n)]
    mult = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(labels, mult, name=f"Z{n}")


def sign_group() -> FiniteGroup:
    """The order-2 group {1, -1}."""
    return FiniteGroup(["1", "-1"], [[0, 1], [1, 0]], name="sign")


def t4() -> FiniteGroup:
    """Fourth roots of unity {1, i, -1, -i} under multiplication."""
    labels = ["1", "i", "-1", "-i"]
    mult = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    return FiniteGroup(labels, mult, name="T4")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: rotations r0..r{n-1}, reflections s0..s{n-1}."""
    if n < 1:
        raise InputError("dihedral group needs n >= 1")

    def idx(a: int, s: int) -> int:
        return s * n + a % n

    labels = [f"r{a}" for a in range(n)] + [f"s{a}" for a in range(n)]
    mult = [[0] * (2 * n) for _ in range(2 * n)]
    for a, s in itertools.product(range(n), range(2)):
        for b, t in itertools.product(range(n), range(2)):
            c = (a + b) % n if s == 0 else (a - b) % n
            mult[idx(a, s)][idx(b, t)] = idx(c, (s + t) % 2)
    return FiniteGroup(labels, mult, name=f"D{n}")


_Q8_BASIS_MULT = {
    # (b1, b2) -> (sign, basis) for basis order 1, i, j, k
    (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
    (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
    (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
    (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
}


def quaternion8() -> FiniteGroup:
    """The quaternion group {+-1, +-i, +-j, +-k}."""
    labels = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]

    def idx(sign: int, basis: int) -> int:
        return sign * 4 + basis

    mult = [[0] * 8 for _ in range(8)]
    for s1, b1 in itertools.product(range(2), range(4)):
        for s2, b2 in itertools.product(range(2), range(4)):
            s, b = _Q8_BASIS_MULT[(b1, b2)]
            mult[idx(s1, b1)][idx(s2, b2)] = idx((s1 + s2 + s) % 2, b)
    return FiniteGroup(labels, mult, name="Q8")


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Componentwise product on pairs, labeled "(x,y)"."""
    pairs = list(itertools.product(range(a.order), range(b.order)))
    index = {p: i for i, p in enumerate(pairs)}
    labels = [f"({a.labels[x]},{b.labels[y]})" for x, y in pairs]
    mult = [[index[(a.mult[x1][x2], b.mult[y1][y2])] for x2, y2 in pairs]
            for x1, y1 in pairs]
    return FiniteGroup(labels, mult, name=f"{a.name}x{b.name}")


def build_group(spec: dict) -> FiniteGroup:
    """Build a group from its JSON-shaped description.

    Builtin references look like ``{"family": "quaternion8"}`` (with an ``n``
    parameter where the family needs one); custom tables supply ``labels``
    and ``table`` explicitly.
    """
    if not isinstance(spec, dict) or "family" not in spec:
        raise InputError("group description must be an object with a 'family' key")
    family = spec["family"]
    if family == "cyclic":
        return cyclic(int(spec["n"]))
    if family == "sign":
        return sign_group()
    if family == "t4":
        return t4()
    if family == "dihedral":
        return dihedral(int(spec["n"]))
    if family == "quaternion8":
        return quaternion8()
    if family == "direct_product":
        return direct_product(build_group(spec["left"]), build_group(spec["right"]))
    if family == "custom":
        try:
            labels, table = spec["labels"], spec["table"]
        except KeyError as exc:
            raise InputError(f"custom group needs {exc} field")
        return FiniteGroup(labels, table, name=spec.get("name", "custom"))
    raise InputError(f"unknown group family {family!r}")


def group_to_dict(group: FiniteGroup) -> dict:
    """Serialize a group; always emits the explicit custom form."""
    return {
        "family": "custom",
        "name": group.name,
        "labels": list(group.labels),
        "table": [list(row) for row in group.mult],
    }
