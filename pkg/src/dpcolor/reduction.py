"""Reducible configurations and the constructive coloring pipeline.

The pipeline colors a plane graph without 4- or 6-cycles from any cover
with lists of size >= 3, keeping impropriety at most 1.  It repeatedly
excises one of three degree-defined configurations, colors the rest
recursively, and extends over the excised part:

* ``low-vertex``: a vertex of degree <= 2;
* ``adjacent-threes``: two adjacent vertices of degree 3;
* ``four-three-threes``: a degree-4 vertex with three degree-3
  neighbors, the three pairwise nonadjacent.

Extension works through residual lists: a color of an excised vertex
survives only if no already-colored outside neighbor's choice is matched
to it.  Surviving choices can then never conflict across the frontier, so
a bounded-impropriety coloring of the excised part merges soundly.  The
list-size floors (1, 1+1, and 2 for the center plus 1 per leaf) follow
from each configuration's outside-neighbor counts, and every configuration
is colorable at those floors; ``verify_config_reducible`` proves it by
exhausting all residual covers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterable, NamedTuple

from .covers import Cover, Lists, validate_cover
from .embedding import PlaneGraph
from .errors import (
    ContractViolationError,
    ForbiddenCyclePresentError,
    ListTooSmallError,
    PartialAssignmentError,
    TheoremViolationError,
)
from .graphs import Graph, build_graph, has_forbidden_cycles, induced_subgraph, normalize_vertex_set
from .solver import RepSet, brute_force_rep_set, impropriety


class ConfigKind(enum.Enum):
    LOW_VERTEX = "low-vertex"
    ADJACENT_THREES = "adjacent-threes"
    FOUR_THREE_THREES = "four-three-threes"


@dataclass(frozen=True)
class ReducibleConfig:
    """A configuration instance: its kind and the vertices to excise."""

    kind: ConfigKind
    vertices: tuple[int, ...]


class RestrictedCover(NamedTuple):
    """Cover on the kept part of the host graph, plus its index map.

    ``vertices[i]`` is the host index of the restricted graph's vertex i.
    """

    cover: Cover
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class ResidualInstance:
    """The excised subgraph with its surviving lists and cover.

    ``vertices[i]`` maps the residual graph's vertex ``i`` back to the
    host graph.  ``cover.lists`` are the residual lists: original colors
    minus everything matched to a colored outside neighbor's choice.
    """

    graph: Graph
    vertices: tuple[int, ...]
    cover: Cover

    @property
    def lists(self) -> Lists:
        return self.cover.lists


@dataclass(frozen=True)
class TraceStep:
    """One excision: kind, host vertices, residual sizes, chosen colors."""

    kind: ConfigKind
    vertices: tuple[int, ...]
    residual_sizes: tuple[int, ...]
    colors: tuple[int, ...]


@dataclass(frozen=True)
class PipelineResult:
    rep_set: RepSet
    trace: tuple[TraceStep, ...]


def restrict(cover: Cover, excised: Iterable[int]) -> RestrictedCover:
    """Cover restricted to the complement of ``excised``.

    Lists are kept verbatim; matchings survive exactly on edges with both
    endpoints outside the excised set.
    """
    g = cover.graph
    gone = set(normalize_vertex_set(g, excised))
    kept = tuple(v for v in range(g.n) if v not in gone)
    sub, _ = induced_subgraph(g, kept)
    matchings = tuple(
        cover.matching_of(kept[u], kept[v]) for u, v in sub.edges
    )
    lists = tuple(cover.lists[v] for v in kept)
    out = Cover(graph=sub, lists=lists, matchings=matchings)
    assert validate_cover(out) is None
    return RestrictedCover(out, kept)


def residual(
    cover: Cover, outside_rep: RepSet, excised: Iterable[int]
) -> ResidualInstance:
    """Residual instance on ``excised`` after coloring everything else.

    ``outside_rep`` is indexed like the restriction to the complement of
    ``excised`` (position i = i-th kept vertex in sorted order).  For each
    excised vertex, every color matched across an edge to the color chosen
    at an outside neighbor is removed; matchings inside the excised part
    are filtered to surviving colors.  Each residual list keeps at least
    ``len(list) - #outside neighbors`` colors.
    """
    g = cover.graph
    gone = normalize_vertex_set(g, excised)
    gone_set = set(gone)
    kept = tuple(v for v in range(g.n) if v not in gone_set)
    if len(outside_rep) != len(kept):
        raise PartialAssignmentError(
            f"outside assignment covers {len(outside_rep)} of {len(kept)} vertices"
        )
    chosen = dict(zip(kept, outside_rep))
    for v, c in chosen.items():
        if c not in cover.lists[v]:
            raise PartialAssignmentError(
                f"outside color {c} not in list of vertex {v}"
            )

    surviving: dict[int, tuple[int, ...]] = {}
    for x in gone:
        removed: set[int] = set()
        for u in g.adjacency[x]:
            if u in gone_set:
                continue
            if u < x:
                removed |= {cx for cu, cx in cover.matching_of(u, x) if cu == chosen[u]}
            else:
                removed |= {cx for cx, cu in cover.matching_of(x, u) if cu == chosen[u]}
        surviving[x] = tuple(c for c in cover.lists[x] if c not in removed)

    sub, vertices = induced_subgraph(g, gone)
    lists = tuple(surviving[v] for v in vertices)
    matchings = []
    for a, b in sub.edges:
        keep_a = set(lists[a])
        keep_b = set(lists[b])
        pairs = cover.matching_of(vertices[a], vertices[b])
        matchings.append(
            tuple(sorted((p, q) for p, q in pairs if p in keep_a and q in keep_b))
        )
    res_cover = Cover(graph=sub, lists=lists, matchings=tuple(matchings))
    assert validate_cover(res_cover) is None
    return ResidualInstance(graph=sub, vertices=vertices, cover=res_cover)


def merge(
    cover: Cover,
    excised: Iterable[int],
    outside_rep: RepSet,
    excised_rep: RepSet,
) -> RepSet:
    """Combine outside and excised colorings into one representative set.

    The contract is checked, not assumed: excised colors must survive the
    residual computation (so no cover edge joins them to outside choices),
    and the combined impropriety must stay within 1.
    """
    g = cover.graph
    gone = normalize_vertex_set(g, excised)
    res = residual(cover, outside_rep, gone)
    if len(excised_rep) != len(gone):
        raise PartialAssignmentError(
            f"excised assignment covers {len(excised_rep)} of {len(gone)} vertices"
        )
    for i, c in enumerate(excised_rep):
        if c not in res.lists[i]:
            raise ContractViolationError(
                f"color {c} at vertex {res.vertices[i]} was removed by the residual step"
            )
    kept = tuple(v for v in range(g.n) if v not in set(gone))
    combined: list[int] = [0] * g.n
    for v, c in zip(kept, outside_rep):
        combined[v] = c
    for v, c in zip(gone, excised_rep):
        combined[v] = c
    rep = tuple(combined)
    counts = impropriety(cover, rep)
    if max(counts, default=0) > 1:
        raise ContractViolationError(
            f"merged impropriety {max(counts)} exceeds 1"
        )
    return rep


def find_reducible_config(graph: Graph) -> ReducibleConfig | None:
    """First reducible configuration by kind priority, then vertex order.

    Priority: low-vertex, then adjacent-threes, then four-three-threes.
    Because adjacent degree-3 vertices are ruled out before the third kind
    is considered, the three listed leaves are automatically pairwise
    nonadjacent.
    """
    degs = graph.degrees()
    for v in range(graph.n):
        if degs[v] <= 2:
            return ReducibleConfig(ConfigKind.LOW_VERTEX, (v,))
    for u, v in graph.edges:
        if degs[u] == 3 and degs[v] == 3:
            return ReducibleConfig(ConfigKind.ADJACENT_THREES, (u, v))
    for v in range(graph.n):
        if degs[v] != 4:
            continue
        threes = [u for u in graph.adjacency[v] if degs[u] == 3]
        if len(threes) >= 3:
            leaves = tuple(threes[:3])
            assert not any(
                graph.has_edge(a, b) for a in leaves for b in leaves if a < b
            )
            return ReducibleConfig(ConfigKind.FOUR_THREE_THREES, (v,) + leaves)
    return None


_CONFIG_SHAPES: dict[ConfigKind, tuple[Graph, tuple[int, ...]]] = {}


def _config_shape(kind: ConfigKind) -> tuple[Graph, tuple[int, ...]]:
    """The excised graph of a configuration and its residual size floors."""
    if kind not in _CONFIG_SHAPES:
        if kind is ConfigKind.LOW_VERTEX:
            shape = build_graph(1, []), (1,)
        elif kind is ConfigKind.ADJACENT_THREES:
            shape = build_graph(2, [(0, 1)]), (1, 1)
        else:
            shape = build_graph(4, [(0, 1), (0, 2), (0, 3)]), (2, 1, 1, 1)
        _CONFIG_SHAPES[kind] = shape
    return _CONFIG_SHAPES[kind]


def _partial_matchings(left: tuple[int, ...], right: tuple[int, ...]):
    """All partial injective matchings between two color lists."""
    options: list[list[tuple[int, int]]] = []

    def rec(i: int, used: set[int], acc: list[tuple[int, int]]):
        if i == len(left):
            options.append(sorted(acc))
            return
        rec(i + 1, used, acc)
        for c in right:
            if c not in used:
                acc.append((left[i], c))
                rec(i + 1, used | {c}, acc)
                acc.pop()

    rec(0, set(), [])
    return [tuple(m) for m in sorted(options)]


def _color_config(kind: ConfigKind, res: ResidualInstance) -> RepSet:
    """Apply the configuration's extension rule to a residual instance.

    * low-vertex: any surviving color (smallest).
    * adjacent-threes: any surviving color for each endpoint; even a
      matched pair only costs impropriety 1.
    * four-three-threes: color the leaves first, then give the center a
      surviving color in conflict with at most one leaf; with two center
      colors and three leaf choices matched to at most one center color
      each, such a color exists by counting.
    """
    for i, colors in enumerate(res.lists):
        if not colors:
            raise ContractViolationError(
                f"residual list of vertex {res.vertices[i]} is empty"
            )
    if kind in (ConfigKind.LOW_VERTEX, ConfigKind.ADJACENT_THREES):
        return tuple(colors[0] for colors in res.lists)
    leaf_choice = {leaf: res.lists[leaf][0] for leaf in (1, 2, 3)}
    best: int | None = None
    for c in res.lists[0]:
        conflicts = sum(
            1
            for leaf, cl in leaf_choice.items()
            if res.cover.conflicts(0, c, leaf, cl)
        )
        if conflicts <= 1:
            best = c
            break
    if best is None:
        raise ContractViolationError(
            "no center color conflicts with at most one leaf"
        )
    return (best, leaf_choice[1], leaf_choice[2], leaf_choice[3])


@dataclass(frozen=True)
class ReducibilityReport:
    """Exhaustive verification outcome for one configuration kind."""

    kind: ConfigKind
    total_covers: int
    verified: int
    counterexample: Cover | None

    @property
    def ok(self) -> bool:
        return self.counterexample is None and self.verified == self.total_covers


def verify_config_reducible(
    kind: ConfigKind, sizes: tuple[int, ...] | None = None
) -> ReducibilityReport:
    """Exhaust every residual cover at the floor list sizes for ``kind``.

    Every cover must admit a representative set of impropriety <= 1, both
    via the extension rule and via brute force; the first cover where
    either fails is returned as a counterexample.
    """
    shape, floors = _config_shape(kind)
    if sizes is None:
        sizes = floors
    if len(sizes) != shape.n or any(s < f for s, f in zip(sizes, floors)):
        raise ValueError(f"sizes {sizes} below floors {floors}")
    lists = tuple(tuple(range(1, s + 1)) for s in sizes)
    per_edge = [
        _partial_matchings(lists[u], lists[v]) for u, v in shape.edges
    ]
    total = 1
    for options in per_edge:
        total *= len(options)
    verified = 0
    for matchings in product(*per_edge):
        cover = Cover(graph=shape, lists=lists, matchings=tuple(matchings))
        res = ResidualInstance(graph=shape, vertices=tuple(range(shape.n)), cover=cover)
        rep = _color_config(kind, res)
        if max(impropriety(cover, rep), default=0) > 1:
            return ReducibilityReport(kind, total, verified, cover)
        if brute_force_rep_set(cover, 1) is None:
            return ReducibilityReport(kind, total, verified, cover)
        verified += 1
    return ReducibilityReport(kind, total, verified, None)


def _reduce_and_color(
    graph: Graph, cover: Cover, names: tuple[int, ...]
) -> tuple[RepSet, list[TraceStep]]:
    if graph.n == 0:
        return (), []
    config = find_reducible_config(graph)
    if config is None:
        raise TheoremViolationError(
            "no reducible configuration in a nonempty graph "
            f"on host vertices {names}",
            graph=graph,
        )
    gone = tuple(sorted(config.vertices))
    sub_cover, kept = restrict(cover, gone)
    sub_rep, trace = _reduce_and_color(
        sub_cover.graph, sub_cover, tuple(names[v] for v in kept)
    )
    res = residual(cover, sub_rep, gone)
    # order residual vertices the way the rule expects (center first)
    if config.kind is ConfigKind.FOUR_THREE_THREES and gone[0] != config.vertices[0]:
        res = _reorder_residual(res, config.vertices)
        rep_local = _color_config(config.kind, res)
        by_vertex = dict(zip(config.vertices, rep_local))
        excised_rep = tuple(by_vertex[v] for v in gone)
    else:
        excised_rep = _color_config(config.kind, res)
    merged = merge(cover, gone, sub_rep, excised_rep)
    step = TraceStep(
        kind=config.kind,
        vertices=tuple(names[v] for v in config.vertices),
        residual_sizes=tuple(len(colors) for colors in res.lists),
        colors=excised_rep,
    )
    return merged, [step] + trace


def _reorder_residual(res: ResidualInstance, order: tuple[int, ...]) -> ResidualInstance:
    """Residual instance re-indexed so that ``order[i]`` becomes vertex i."""
    position = {v: i for i, v in enumerate(res.vertices)}
    perm = tuple(position[v] for v in order)  # new index -> old index
    inv = {old: new for new, old in enumerate(perm)}
    edges = [
        tuple(sorted((inv[a], inv[b]))) for a, b in res.graph.edges
    ]
    g = build_graph(res.graph.n, edges)
    lists = tuple(res.lists[old] for old in perm)
    matchings = []
    for a, b in g.edges:
        oa, ob = perm[a], perm[b]
        pairs = res.cover.matching_of(min(oa, ob), max(oa, ob))
        if oa > ob:
            pairs = tuple((q, p) for p, q in pairs)
        matchings.append(tuple(sorted(pairs)))
    cover = Cover(graph=g, lists=lists, matchings=tuple(matchings))
    vertices = tuple(res.vertices[old] for old in perm)
    return ResidualInstance(graph=g, vertices=vertices, cover=cover)


def color_planar_no46(pg: PlaneGraph, cover: Cover) -> PipelineResult:
    """Color a plane graph without 4-/6-cycles from lists of size >= 3.

    Returns a representative set of impropriety at most 1 together with
    the excision trace.  Raises ``TheoremViolationError`` if no reducible
    configuration is found on a nonempty remainder, which cannot happen
    for valid inputs.
    """
    if cover.graph != pg.graph:
        raise ContractViolationError("cover host differs from the plane graph")
    if has_forbidden_cycles(pg.graph):
        raise ForbiddenCyclePresentError("graph contains a 4-cycle or 6-cycle")
    for v in range(pg.graph.n):
        if len(cover.lists[v]) < 3:
            raise ListTooSmallError(
                f"list of vertex {v} has size {len(cover.lists[v])} < 3"
            )
    rep, trace = _reduce_and_color(
        pg.graph, cover, tuple(range(pg.graph.n))
    )
    return PipelineResult(rep_set=rep, trace=tuple(trace))
