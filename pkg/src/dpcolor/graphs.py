"""Simple undirected graphs on dense integer vertices.

Vertices are the indices 0..n-1.  Edges are unordered pairs, stored sorted,
and every derived structure (adjacency, subgraphs, cycle lists) iterates in
a fixed sorted order so that solver traces and tests are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import (
    BadLengthError,
    DuplicateEdgeError,
    IndexOutOfRangeError,
    LoopEdgeError,
    OverlappingSetsError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` is a lexicographically sorted tuple of ``(u, v)`` pairs with
    ``u < v``; ``adjacency[v]`` is the sorted tuple of neighbors of ``v``.
    Construct through :func:`build_graph`, which validates the input.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)


class InducedSubgraph(NamedTuple):
    """Result of :func:`induced_subgraph`: the subgraph plus its index map.

    ``vertices[i]`` is the original index of the subgraph's vertex ``i``
    (so the map original -> new is ``vertices.index``, and ``vertices`` is
    sorted).
    """

    graph: Graph
    vertices: tuple[int, ...]


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise IndexOutOfRangeError(f"vertex {v} not in 0..{n - 1}")


def build_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a validated :class:`Graph` from a vertex count and edge pairs."""
    if n < 0:
        raise IndexOutOfRangeError(f"vertex count {n} is negative")
    seen: set[Edge] = set()
    for pair in edges:
        u, v = pair
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}")
        _check_vertex(u, n)
        _check_vertex(v, n)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"edge {key} given twice")
        seen.add(key)
    sorted_edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted_edges:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adj)
    return Graph(n=n, edges=sorted_edges, adjacency=adjacency)


def normalize_vertex_set(graph: Graph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Sorted, duplicate-free vertex tuple, validated against ``graph``."""
    out = sorted(set(vertices))
    for v in out:
        _check_vertex(v, graph.n)
    return tuple(out)


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> InducedSubgraph:
    """Subgraph induced by ``vertices``, reindexed to 0..|U|-1."""
    kept = normalize_vertex_set(graph, vertices)
    index = {v: i for i, v in enumerate(kept)}
    sub_edges = [
        (index[u], index[v])
        for u, v in graph.edges
        if u in index and v in index
    ]
    return InducedSubgraph(build_graph(len(kept), sub_edges), kept)


def cross_edges(
    graph: Graph, left: Iterable[int], right: Iterable[int]
) -> list[Edge]:
    """Edges with one endpoint in ``left`` and the other in ``right``.

    The two sets must be disjoint.
    """
    xs = set(normalize_vertex_set(graph, left))
    ys = set(normalize_vertex_set(graph, right))
    overlap = xs & ys
    if overlap:
        raise OverlappingSetsError(f"sets share vertices {sorted(overlap)}")
    return [
        (u, v)
        for u, v in graph.edges
        if (u in xs and v in ys) or (u in ys and v in xs)
    ]


def is_connected(graph: Graph) -> bool:
    """True for graphs on at most one vertex and all connected graphs."""
    if graph.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in graph.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == graph.n


def _cycles_from_anchor(graph: Graph, anchor: int, k: int, stop_at_first: bool):
    """DFS over simple paths anchored at their minimum vertex.

    A cycle is reported as ``(anchor, v1, .., v_{k-1})`` with every ``vi``
    greater than ``anchor``; direction is canonicalized by requiring the
    second vertex to be smaller than the last, so each cycle appears once
    up to rotation and reflection.
    """
    found: list[tuple[int, ...]] = []
    path = [anchor]
    on_path = {anchor}

    def extend() -> bool:
        v = path[-1]
        if len(path) == k:
            if anchor in graph.adjacency[v] and path[1] < path[-1]:
                found.append(tuple(path))
                return stop_at_first
            return False
        for w in graph.adjacency[v]:
            if w <= anchor or w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            done = extend()
            on_path.remove(w)
            path.pop()
            if done:
                return True
        return False

    extend()
    return found


def list_cycles(graph: Graph, k: int) -> list[tuple[int, ...]]:
    """All cycles on exactly ``k`` distinct vertices, each listed once.

    Cycles are vertex sequences starting at their smallest vertex, with the
    lexicographically smaller of the two directions.
    """
    if k < 3:
        raise BadLengthError(f"cycle length {k} < 3")
    out: list[tuple[int, ...]] = []
    for anchor in range(graph.n):
        out.extend(_cycles_from_anchor(graph, anchor, k, stop_at_first=False))
    return out


def has_cycle_of_length(graph: Graph, k: int) -> bool:
    """True iff the graph contains a cycle on exactly ``k`` vertices."""
    if k < 3:
        raise BadLengthError(f"cycle length {k} < 3")
    return any(
        _cycles_from_anchor(graph, anchor, k, stop_at_first=True)
        for anchor in range(graph.n)
    )


def has_forbidden_cycles(graph: Graph) -> bool:
    """True iff the graph contains a 4-cycle or a 6-cycle."""
    return has_cycle_of_length(graph, 4) or has_cycle_of_length(graph, 6)
