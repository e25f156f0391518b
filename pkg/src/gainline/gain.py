"""Gain functions, their matrices, switching and balance.

Gains are stored only on the default (low-to-high) orientation; the reverse
gain is always computed as the group inverse, so the defining identity
psi(u,v) * psi(v,u) = 1 holds structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import AlgebraElement, CGMatrix, group_diagonal
from .errors import InputError, ValidationError
from .graph import SimpleGraph, graph_from_dict, graph_to_dict
from .group import (Element, FiniteGroup, build_group, group_to_dict,
                    is_central_weak_involution)


@dataclass(frozen=True)
class GainFunction:
    """An edge labeling by group elements, one gain per stored edge."""

    graph: SimpleGraph
    group: FiniteGroup
    forward: tuple[Element, ...]

    def __post_init__(self):
        if len(self.forward) != self.graph.m:
            raise ValidationError("need exactly one gain per edge")
        for g in self.forward:
            if not 0 <= g < self.group.order:
                raise ValidationError(f"gain index {g} out of range")

    def gain(self, u: int, v: int) -> Element:
        """The gain of the oriented edge (u, v)."""
        key = (min(u, v), max(u, v))
        try:
            k = self.graph.edge_index[key]
        except KeyError:
            raise InputError(f"vertices {u} and {v} are not adjacent")
        g = self.forward[k]
        return g if (u, v) == self.graph.edges[k] else self.group.invert(g)


@dataclass(frozen=True)
class SwitchingFunction:
    """A group element per vertex."""

    group: FiniteGroup
    values: tuple[Element, ...]


def constant_gain(graph: SimpleGraph, group: FiniteGroup, s: Element) -> GainFunction:
    """The constant gain s; s must be a weak involution so that it is a
    well-defined gain on unordered edges."""
    if group.mult[s][s] != 0:
        raise ValidationError("constant gain requires s with s^2 = 1")
    return GainFunction(graph, group, (s,) * graph.m)


def gain_adjacency(psi: GainFunction) -> CGMatrix:
    """The adjacency matrix over CG; satisfies A* = A."""
    G = psi.group
    n = psi.graph.n
    zero = AlgebraElement.zero(G)
    entries = [[zero] * n for _ in range(n)]
    for k, (u, v) in enumerate(psi.graph.edges):
        g = psi.forward[k]
        entries[u][v] = AlgebraElement.unit(G, g)
        entries[v][u] = AlgebraElement.unit(G, G.invert(g))
    return CGMatrix(G, entries)


def s_laplacian(psi: GainFunction, s: Element) -> CGMatrix:
    """deg(Gamma, G) + s * adjacency, for a central weak involution s."""
    G = psi.group
    if not is_central_weak_involution(G, s):
        raise ValidationError(f"element {s} is not a central weak involution")
    adj = gain_adjacency(psi).scalar_mul(AlgebraElement.unit(G, s), side="left")
    n = psi.graph.n
    entries = [list(row) for row in adj.entries]
    one = G.identity
    for i in range(n):
        entries[i][i] = entries[i][i] + AlgebraElement.unit(G, one).scale(
            psi.graph.degree(i))
    return CGMatrix(G, entries)


def switch(psi: GainFunction, f: SwitchingFunction | Sequence[Element]) -> GainFunction:
    """psi^f with psi^f(u, v) = f(u)^-1 psi(u, v) f(v)."""
    values = f.values if isinstance(f, SwitchingFunction) else tuple(f)
    if len(values) != psi.graph.n:
        raise ValidationError("switching function must assign a value per vertex")
    G = psi.group
    out = []
    for k, (u, v) in enumerate(psi.graph.edges):
        g = G.mul(G.invert(values[u]), G.mul(psi.forward[k], values[v]))
        out.append(g)
    return GainFunction(psi.graph, G, tuple(out))


def walk_gain(psi: GainFunction, walk: Sequence[int]) -> Element:
    """The ordered product of gains along a walk of vertices."""
    if len(walk) < 1:
        raise InputError("walk must contain at least one vertex")
    G = psi.group
    g = G.identity
    for u, v in zip(walk, walk[1:]):
        g = G.mul(g, psi.gain(u, v))
    return g


def _spanning_tree(graph: SimpleGraph) -> tuple[list[int], list[int]]:
    """BFS tree from vertex 0: (parent per vertex, tree edge indices)."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(graph.n)]
    for k, (u, v) in enumerate(graph.edges):
        adj[u].append((v, k))
        adj[v].append((u, k))
    parent = [-1] * graph.n
    tree_edges = []
    order = [0]
    seen = {0}
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for v, k in adj[u]:
            if v not in seen:
                seen.add(v)
                parent[v] = u
                tree_edges.append(k)
                order.append(v)
    return parent, order


def balance_witness(psi: GainFunction) -> SwitchingFunction | None:
    """A switching function f with psi^f = 1 constant, or None.

    Propagates f along a BFS spanning tree and accepts iff every non-tree
    edge closes consistently.
    """
    found = switching_to(psi, constant_gain(psi.graph, psi.group, psi.group.identity))
    return found


def is_balanced(psi: GainFunction) -> bool:
    return balance_witness(psi) is not None


def antibalance_witness(psi: GainFunction) -> SwitchingFunction | None:
    """Witness that psi is switching-equivalent to the constant -1 gain.

    Only defined when the group designates an element labeled "-1".
    """
    try:
        minus_one = psi.group.element("-1")
    except InputError:
        raise InputError(
            f"group {psi.group.name} has no element labeled '-1'; "
            "antibalance is undefined")
    return switching_to(psi, constant_gain(psi.graph, psi.group, minus_one))


def switching_to(psi1: GainFunction, psi2: GainFunction) -> SwitchingFunction | None:
    """Some f with psi2 = psi1^f, or None if the gains are not equivalent.

    Tree propagation forces f up to the seed f(root); all |G| seeds are
    tried because for nonabelian G the propagated values depend on it.
    """
    if psi1.graph != psi2.graph:
        raise ValidationError("gain functions live on different graphs")
    if psi1.group != psi2.group:
        raise ValidationError("gain functions take values in different groups")
    G = psi1.group
    graph = psi1.graph
    parent, bfs_order = _spanning_tree(graph)

    for seed in G.elements():
        f = [-1] * graph.n
        f[0] = seed
        # psi2(u,v) = f(u)^-1 psi1(u,v) f(v)  =>  f(v) = psi1(u,v)^-1 f(u) psi2(u,v)
        for v in bfs_order[1:]:
            u = parent[v]
            f[v] = G.mul(G.invert(psi1.gain(u, v)), G.mul(f[u], psi2.gain(u, v)))
        ok = True
        for k, (u, v) in enumerate(graph.edges):
            lhs = G.mul(G.invert(f[u]), G.mul(psi1.forward[k], f[v]))
            if lhs != psi2.forward[k]:
                ok = False
                break
        if ok:
            return SwitchingFunction(G, tuple(f))
    return None


def switching_equivalent(psi1: GainFunction, psi2: GainFunction) -> bool:
    return switching_to(psi1, psi2) is not None


def switching_diagonal(f: SwitchingFunction) -> CGMatrix:
    """The diagonal matrix underline(f) used to conjugate gain matrices."""
    return group_diagonal(f.group, f.values)


# -- serialization ----------------------------------------------------------

def gain_from_dict(data: dict) -> GainFunction:
    """Parse ``{"graph": ..., "group": ..., "gains": ["-i", ...]}``.

    Gains are labels, one per edge in edge order, read on the default
    orientation.
    """
    try:
        graph = graph_from_dict(data["graph"])
        group = build_group(data["group"])
        gains = data["gains"]
    except KeyError as exc:
        raise InputError(f"gain description needs {exc} field")
    if len(gains) != graph.m:
        raise InputError(
            f"expected {graph.m} gains (one per edge), got {len(gains)}")
    forward = tuple(group.element(str(label)) for label in gains)
    return GainFunction(graph, group, forward)


def gain_to_dict(psi: GainFunction) -> dict:
    return {
        "graph": graph_to_dict(psi.graph),
        "group": group_to_dict(psi.group),
        "gains": [psi.group.label(g) for g in psi.forward],
    }
