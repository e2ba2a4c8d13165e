"""Exact search for representative sets in covers.

A representative set picks one color from each vertex's list; its
impropriety at a vertex is the number of incident edges whose matching
joins the two chosen colors.  ``find_rep_set`` is a complete backtracking
search with forward checking; ``brute_force_rep_set`` enumerates all total
assignments and exists as an independent oracle.  All-cover questions
(``is_dp_colorable``, ``dp_chromatic``) quantify over perfect-matching
covers of the canonical 1..k lists.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import product

from .covers import (
    DEFAULT_BUDGET,
    Cover,
    diagonal_cover,
    enumerate_perfect_covers,
    random_cover,
    uniform_assignment,
)
from .errors import (
    BudgetExceededError,
    EmptyListError,
    NotInListError,
    PartialAssignmentError,
)
from .graphs import Graph

RepSet = tuple[int, ...]


def _check_total(cover: Cover, rep: RepSet) -> None:
    if len(rep) != cover.graph.n or any(c is None for c in rep):
        raise PartialAssignmentError(
            f"assignment covers {len(rep)} of {cover.graph.n} vertices"
        )
    for v, c in enumerate(rep):
        if c not in cover.lists[v]:
            raise NotInListError(f"color {c} not in list of vertex {v}")


def impropriety(cover: Cover, rep: RepSet) -> tuple[int, ...]:
    """Per-vertex conflict counts of a total assignment."""
    _check_total(cover, rep)
    counts = [0] * cover.graph.n
    for (u, v), matching in zip(cover.graph.edges, cover.matchings):
        if (rep[u], rep[v]) in matching:
            counts[u] += 1
            counts[v] += 1
    return tuple(counts)


def max_impropriety(cover: Cover, rep: RepSet) -> int:
    return max(impropriety(cover, rep), default=0)


def _conflict_maps(cover: Cover) -> list[dict[int, dict[int, int]]]:
    """maps[u][v][cu] -> the color of v matched with cu on edge {u, v}."""
    maps: list[dict[int, dict[int, int]]] = [dict() for _ in range(cover.graph.n)]
    for (u, v), matching in zip(cover.graph.edges, cover.matchings):
        maps[u][v] = {cu: cv for cu, cv in matching}
        maps[v][u] = {cv: cu for cu, cv in matching}
    return maps


def find_rep_set(
    cover: Cover, d: int, budget: int = DEFAULT_BUDGET
) -> RepSet | None:
    """A representative set with impropriety at most ``d``, or ``None``.

    Complete: ``None`` is returned only when no such set exists.  Vertices
    are assigned in descending-degree order; candidate colors are tried by
    ascending conflict count against the current partial assignment.  A
    branch dies when an assigned vertex would exceed ``d`` or when some
    unassigned vertex keeps no viable color.  ``budget`` caps search-tree
    nodes and raises rather than hang.
    """
    g = cover.graph
    if g.n == 0:
        return ()
    for v in range(g.n):
        if not cover.lists[v]:
            raise EmptyListError(f"vertex {v} has an empty list")
    maps = _conflict_maps(cover)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    rank = {v: i for i, v in enumerate(order)}
    chosen: list[int | None] = [None] * g.n
    counts = [0] * g.n
    nodes = 0

    def viable(v: int, c: int) -> bool:
        hits = 0
        for u, pairing in maps[v].items():
            if chosen[u] is not None and pairing.get(c) == chosen[u]:
                if counts[u] >= d:
                    return False
                hits += 1
                if hits > d:
                    return False
        return True

    def assign(pos: int) -> RepSet | None:
        nonlocal nodes
        if pos == g.n:
            return tuple(chosen)  # type: ignore[arg-type]
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"search exceeded {budget} nodes")
        v = order[pos]
        candidates = sorted(
            (c for c in cover.lists[v] if viable(v, c)),
            key=lambda c: (
                sum(
                    1
                    for u, pairing in maps[v].items()
                    if chosen[u] is not None and pairing.get(c) == chosen[u]
                ),
                c,
            ),
        )
        for c in candidates:
            bumped = []
            for u, pairing in maps[v].items():
                if chosen[u] is not None and pairing.get(c) == chosen[u]:
                    counts[u] += 1
                    bumped.append(u)
            chosen[v] = c
            counts[v] = len(bumped)
            # forward check: every later vertex must keep a viable color
            if all(
                any(viable(w, cw) for cw in cover.lists[w])
                for w in maps[v]
                if chosen[w] is None and rank[w] > pos
            ):
                result = assign(pos + 1)
                if result is not None:
                    return result
            chosen[v] = None
            counts[v] = 0
            for u in bumped:
                counts[u] -= 1
        return None

    return assign(0)


def brute_force_rep_set(
    cover: Cover, d: int, budget: int = DEFAULT_BUDGET
) -> RepSet | None:
    """Exhaustive oracle with the same answer semantics as ``find_rep_set``."""
    g = cover.graph
    if g.n == 0:
        return ()
    for v in range(g.n):
        if not cover.lists[v]:
            raise EmptyListError(f"vertex {v} has an empty list")
    total = math.prod(len(colors) for colors in cover.lists)
    if total > budget:
        raise BudgetExceededError(f"{total} assignments exceed budget {budget}")
    for rep in product(*cover.lists):
        if max(impropriety(cover, rep), default=0) <= d:
            return rep
    return None


@dataclass(frozen=True)
class Colorability:
    """Outcome of an all-covers question.

    ``witness`` is a cover with no valid representative set when
    ``colorable`` is false; ``covers_checked`` counts covers examined.
    """

    colorable: bool
    witness: Cover | None
    covers_checked: int


def _spanning_forest_edges(graph: Graph) -> set[int]:
    """Edge indices of a spanning forest (BFS from each unseen vertex)."""
    parent_edge: set[int] = set()
    seen: set[int] = set()
    index = {edge: i for i, edge in enumerate(graph.edges)}
    for root in range(graph.n):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in graph.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    key = (v, w) if v < w else (w, v)
                    parent_edge.add(index[key])
                    queue.append(w)
    return parent_edge


def is_dp_colorable(
    graph: Graph,
    k: int,
    d: int,
    samples: int | None = None,
    seed: int = 0,
    reduce_by_renaming: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> Colorability:
    """Decide colorability over every cover of the canonical k-assignment.

    Exhaustive by default: every perfect-matching cover of the lists
    ``1..k`` is checked (perfect covers dominate partial ones, and one
    assignment suffices because fibers may be renamed freely).  With
    ``reduce_by_renaming`` the matchings of a spanning forest are pinned;
    every cover is fiber-isomorphic to a pinned one, shrinking the count
    from (k!)^m to (k!)^(m-n+components).  ``samples`` switches to seeded
    random perfect covers instead of exhaustion.
    """
    lists = uniform_assignment(graph.n, k)
    checked = 0
    if samples is not None:
        rng = random.Random(seed)
        for _ in range(samples):
            cover = random_cover(graph, lists, seed=rng.randrange(2**32), perfect=True)
            checked += 1
            if find_rep_set(cover, d, budget=budget) is None:
                return Colorability(False, cover, checked)
        return Colorability(True, None, checked)
    free = None
    if reduce_by_renaming:
        pinned = _spanning_forest_edges(graph)
        free = [i for i in range(graph.m) if i not in pinned]
    for cover in enumerate_perfect_covers(graph, lists, budget=budget, free_edges=free):
        checked += 1
        if find_rep_set(cover, d, budget=budget) is None:
            return Colorability(False, cover, checked)
    return Colorability(True, None, checked)


def dp_chromatic(graph: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Least ``k`` such that every cover of every k-assignment is colorable.

    Uses the spanning-forest renaming reduction; without it the yes-case
    at ``k`` would need (k!)^m covers, which is already impractical for K4.
    """
    for k in range(1, graph.n + 2):
        result = is_dp_colorable(graph, k, 0, reduce_by_renaming=True, budget=budget)
        if result.colorable:
            return k
    raise AssertionError("unreachable: max-degree+1 colors always suffice")


def list_relaxed_colorable(
    graph: Graph, lists, d: int, budget: int = DEFAULT_BUDGET
) -> RepSet | None:
    """A list coloring where each color class induces max degree <= d.

    Solved as a representative-set search on the equal-color cover, whose
    conflicts are exactly "same color on an edge".
    """
    return find_rep_set(diagonal_cover(graph, tuple(lists)), d, budget=budget)
