"""Ordered simple graphs, orientations, incidence and line graphs.

Vertices are 0-based indices internally; the file format is 1-based to match
the usual way small examples are drawn.  Edges are normalized to (min, max)
pairs and keep their given order, so the default orientation and the line
graph are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InputError, ValidationError


@dataclass(frozen=True)
class SimpleGraph:
    """A finite, connected, simple graph.

    Input graphs always carry at least one edge; the single-vertex edgeless
    graph is allowed only so that line_graph(K2) has an image.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("graph needs at least one vertex")
        if not self.edges and self.n > 1:
            raise ValidationError("graph needs at least one edge")
        seen = set()
        norm = []
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValidationError(f"edge {e} out of vertex range")
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValidationError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(norm))
        if not _connected(self.n, self.edges):
            raise ValidationError("graph is not connected")

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map (min, max) endpoint pair -> edge position."""
        return {e: k for k, e in enumerate(self.edges)}

    def incident_edges(self, v: int) -> list[int]:
        return [k for k, (a, b) in enumerate(self.edges) if v in (a, b)]

    def degree(self, v: int) -> int:
        return len(self.incident_edges(v))


def _connected(n: int, edges: tuple[tuple[int, int], ...]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


@dataclass(frozen=True)
class Orientation:
    """One ordered (tail, head) pair per edge, in edge order."""

    graph: SimpleGraph
    heads: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.heads) != self.graph.m:
            raise ValidationError("orientation must cover every edge exactly once")
        for k, (t, h) in enumerate(self.heads):
            if (min(t, h), max(t, h)) != self.graph.edges[k]:
                raise ValidationError(
                    f"oriented pair {(t, h)} does not match edge {self.graph.edges[k]}")

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, tuple((h, t) for t, h in self.heads))


def default_orientation(graph: SimpleGraph) -> Orientation:
    """Each edge oriented from its lower to its higher vertex index."""
    return Orientation(graph, graph.edges)


@dataclass(frozen=True)
class LineGraphData:
    """The line graph plus, for each line edge, the shared root vertex."""

    line: SimpleGraph
    shared_vertex: tuple[int, ...]


def line_graph(graph: SimpleGraph) -> LineGraphData:
    """Vertices are the edges of the input, in the same order.

    Line edges are ordered lexicographically by their (min, max) edge-index
    pair; each records the vertex the two edges share.
    """
    m = graph.m
    line_edges = []
    shared = []
    for i in range(m):
        for j in range(i + 1, m):
            a, b = set(graph.edges[i]), set(graph.edges[j])
            common = a & b
            if common:
                line_edges.append((i, j))
                shared.append(common.pop())
    return LineGraphData(SimpleGraph(m, tuple(line_edges)), tuple(shared))


def incidence_matrix(graph: SimpleGraph) -> np.ndarray:
    """Classical 0/1 vertex-by-edge incidence matrix."""
    out = np.zeros((graph.n, graph.m), dtype=np.int64)
    for k, (u, v) in enumerate(graph.edges):
        out[u, k] = 1
        out[v, k] = 1
    return out


def classical_matrices(graph: SimpleGraph) -> dict[str, np.ndarray]:
    """Adjacency, degree, Laplacian and signless Laplacian over the integers."""
    a = np.zeros((graph.n, graph.n), dtype=np.int64)
    for u, v in graph.edges:
        a[u, v] = 1
        a[v, u] = 1
    deg = np.diag(a.sum(axis=1))
    return {
        "adjacency": a,
        "degree": deg,
        "laplacian": deg - a,
        "signless_laplacian": deg + a,
    }


def graph_from_dict(data: dict) -> SimpleGraph:
    """Parse ``{"n": 4, "edges": [[1,2], ...]}`` with 1-based vertices."""
    try:
        n = int(data["n"])
        edges = data["edges"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"graph description needs 'n' and 'edges': {exc}")
    if not edges:
        raise InputError("input graph needs at least one edge")
    converted = []
    for e in edges:
        if len(e) != 2:
            raise InputError(f"edge {e} must have two endpoints")
        u, v = int(e[0]) - 1, int(e[1]) - 1
        if u < 0 or v < 0:
            raise InputError(f"vertices are 1-based; got edge {e}")
        converted.append((u, v))
    try:
        return SimpleGraph(n, tuple(converted))
    except ValidationError as exc:
        raise InputError(str(exc))


def graph_to_dict(graph: SimpleGraph) -> dict:
    return {"n": graph.n, "edges": [[u + 1, v + 1] for u, v in graph.edges]}
