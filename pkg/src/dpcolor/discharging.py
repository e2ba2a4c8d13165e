"""Exact discharging ledger for plane graphs without 4- or 6-cycles.

Charges live in integer sixths: a vertex starts at ``2*deg - 6`` (12*deg -
36 sixths) and a face at ``deg - 6``; by Euler's formula the grand total
is exactly -12.  Five local rules move charge around:

* R1: every 4+-vertex sends 1 to each incident 3-face;
* R2: every 4+-vertex sends 1/3 to each incident 5-face;
* R3: every 4+-vertex sends 1/3 to each of its pendant 3-faces;
* R4: every 7+-face sends 1/3 to each incident 3-vertex;
* R5: every 3-vertex sends 2/3 to each incident 3-face.

Incidence counts multiplicity along face walks (a cut vertex met twice by
a walk pays or receives twice; such transfers are flagged).  The audit
then classifies vertices and faces by degree and checks that every element
whose local neighborhood satisfies the structural requirements (minimum
degree 3 nearby, no adjacent degree-3 vertices, 4-vertices with at most
two degree-3 neighbors) ends with final charge >= 0.  Elements whose
neighborhood violates a requirement are reported as out of the analysis
instead of failed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .embedding import Face, PlaneGraph, pendant_3faces
from .errors import (
    ForbiddenCyclePresentError,
    HypothesisViolatedError,
    TheoremViolationError,
)
from .graphs import has_forbidden_cycles

Element = tuple[str, int]  # ("vertex", i) or ("face", i)

VERTEX_UNIT = 12  # sixths per unit of vertex degree in the initial charge
TOTAL_SIXTHS = -72  # the -12 grand total, in sixths


def charge_str(sixths: int) -> str:
    """Human form of a charge stored in sixths, e.g. -72 -> ``-12``."""
    return str(Fraction(sixths, 6))


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: Element
    target: Element
    sixths: int
    multiplicity: int = 1


@dataclass(frozen=True)
class ChargeLedger:
    """Initial charges plus an ordered transfer log.

    Finals are always derived (initial - outgoing + incoming), so the
    conservation law ``sum(final) == sum(initial)`` holds by construction
    and is re-asserted wherever a ledger is built.
    """

    vertex_initial: tuple[int, ...]
    face_initial: tuple[int, ...]
    transfers: tuple[Transfer, ...]

    @property
    def initial_total(self) -> int:
        return sum(self.vertex_initial) + sum(self.face_initial)

    def initial(self, element: Element) -> int:
        kind, i = element
        return self.vertex_initial[i] if kind == "vertex" else self.face_initial[i]

    def incoming(self, element: Element) -> int:
        return sum(t.sixths for t in self.transfers if t.target == element)

    def outgoing(self, element: Element) -> int:
        return sum(t.sixths for t in self.transfers if t.source == element)

    def final(self, element: Element) -> int:
        return self.initial(element) - self.outgoing(element) + self.incoming(element)

    def final_total(self) -> int:
        return self.initial_total

    def finals(self) -> dict[Element, int]:
        out: dict[Element, int] = {}
        for i, charge in enumerate(self.vertex_initial):
            out[("vertex", i)] = charge
        for i, charge in enumerate(self.face_initial):
            out[("face", i)] = charge
        for t in self.transfers:
            out[t.source] -= t.sixths
            out[t.target] += t.sixths
        return out


def initial_charges(pg: PlaneGraph) -> ChargeLedger:
    """Starting charges: 2*deg - 6 per vertex, deg - 6 per face."""
    g = pg.graph
    vertex_initial = tuple(12 * g.degree(v) - 36 for v in range(g.n))
    face_initial = tuple(6 * f.degree - 36 for f in pg.faces)
    ledger = ChargeLedger(vertex_initial, face_initial, ())
    assert ledger.initial_total == TOTAL_SIXTHS, ledger.initial_total
    return ledger


def _face_incidences(pg: PlaneGraph, v: int) -> dict[int, int]:
    """face index -> number of corners of ``v`` on that face."""
    counts: dict[int, int] = {}
    for face in pg.faces_at_vertex(v):
        counts[face.index] = counts.get(face.index, 0) + 1
    return counts


def apply_rules(pg: PlaneGraph) -> ChargeLedger:
    """Initial charges with all five transfer rules applied."""
    if has_forbidden_cycles(pg.graph):
        raise ForbiddenCyclePresentError("graph contains a 4-cycle or 6-cycle")
    g = pg.graph
    base = initial_charges(pg)
    transfers: list[Transfer] = []

    def face_degree(i: int) -> int:
        return pg.faces[i].degree

    for v in range(g.n):  # R1, R2: 4+-vertices pay incident small faces
        if g.degree(v) < 4:
            continue
        for fi, mult in sorted(_face_incidences(pg, v).items()):
            if face_degree(fi) == 3:
                transfers.append(
                    Transfer("R1", ("vertex", v), ("face", fi), 6 * mult, mult)
                )
    for v in range(g.n):
        if g.degree(v) < 4:
            continue
        for fi, mult in sorted(_face_incidences(pg, v).items()):
            if face_degree(fi) == 5:
                transfers.append(
                    Transfer("R2", ("vertex", v), ("face", fi), 2 * mult, mult)
                )
    for v in range(g.n):  # R3: 4+-vertices pay their pendant 3-faces
        if g.degree(v) < 4:
            continue
        for face in pendant_3faces(pg, v):
            transfers.append(
                Transfer("R3", ("vertex", v), ("face", face.index), 2)
            )
    for face in pg.faces:  # R4: big faces feed incident 3-vertices
        if face.degree < 7:
            continue
        for v, mult in sorted(face.vertex_multiplicity.items()):
            if g.degree(v) == 3:
                transfers.append(
                    Transfer("R4", ("face", face.index), ("vertex", v), 2 * mult, mult)
                )
    for v in range(g.n):  # R5: 3-vertices pay incident 3-faces
        if g.degree(v) != 3:
            continue
        for fi, mult in sorted(_face_incidences(pg, v).items()):
            if face_degree(fi) == 3:
                transfers.append(
                    Transfer("R5", ("vertex", v), ("face", fi), 4 * mult, mult)
                )
    ledger = ChargeLedger(base.vertex_initial, base.face_initial, tuple(transfers))
    assert sum(ledger.finals().values()) == TOTAL_SIXTHS
    return ledger


# --- case audit -------------------------------------------------------------


@dataclass(frozen=True)
class AuditEntry:
    element: Element
    case: str
    pattern: str
    compliant: bool
    reason: str  # why the element is out of the analysis, if it is
    initial: int
    incoming: int
    outgoing: int
    final: int

    @property
    def verdict(self) -> str:
        if not self.compliant:
            return "out-of-analysis"
        return "pass" if self.final >= 0 else "fail"


@dataclass(frozen=True)
class AuditReport:
    entries: tuple[AuditEntry, ...]
    initial_total: int
    final_total: int

    def failures(self) -> tuple[AuditEntry, ...]:
        return tuple(e for e in self.entries if e.verdict == "fail")

    @property
    def all_audited_nonnegative(self) -> bool:
        return not self.failures()


def _triangle_mates(pg: PlaneGraph, v: int) -> set[int]:
    """Vertices sharing a 3-face with ``v``."""
    mates: set[int] = set()
    for face in pg.faces_at_vertex(v):
        if face.degree == 3:
            mates |= set(face.corners) - {v}
    return mates


def _three_neighbors(pg: PlaneGraph, v: int) -> list[int]:
    return [u for u in pg.graph.adjacency[v] if pg.graph.degree(u) == 3]


def _vertex_entry(pg: PlaneGraph, v: int) -> tuple[str, str, bool, str]:
    """(case, pattern, compliant, reason) for a vertex.

    A vertex is inside the analysis when its closed neighborhood satisfies
    the structural requirements: every vertex there has degree >= 3 (this
    also forces faces flanking an incident 3-face to share exactly one
    edge with it, hence to be large), a degree-3 vertex has no degree-3
    neighbor, and a degree-4 vertex has at most two degree-3 neighbors.
    """
    g = pg.graph
    deg = g.degree(v)
    pattern = "(" + ",".join(str(f.degree) for f in pg.faces_at_vertex(v)) + ")"
    case = "3-vertex" if deg == 3 else "4-vertex" if deg == 4 else "5+-vertex"
    if deg <= 2:
        return (f"{deg}-vertex", pattern, False, "degree below 3")
    small = [u for u in g.adjacency[v] if g.degree(u) < 3]
    if small:
        return (case, pattern, False, f"neighbor {small[0]} has degree below 3")
    threes = _three_neighbors(pg, v)
    if deg == 3 and threes:
        return (case, pattern, False, f"adjacent degree-3 vertices {v} and {threes[0]}")
    if deg == 4 and len(threes) > 2:
        return (case, pattern, False, f"{len(threes)} degree-3 neighbors")
    return (case, pattern, True, "")


def _face_entry(pg: PlaneGraph, face: Face) -> tuple[str, str, bool, str]:
    """(case, pattern, compliant, reason) for a face.

    A 3-face is in the analysis when its corner degrees are (3,4+,4+) or
    (4+,4+,4+) and, in the former case, the degree-3 corner's neighbor off
    the face has degree >= 4 (that neighbor is the pendant payer).  A
    5+-face is in when every corner has degree >= 3 and no boundary edge
    joins two degree-3 vertices, which caps its degree-3 corners at half
    its degree.  Other face degrees have no case: a 2-face needs degree-1
    endpoints and, absent 4-cycles, a 4-face needs a degree-1 backtrack.
    """
    g = pg.graph
    degs = [g.degree(u) for u in face.corners]
    pattern = "(" + ",".join(str(d) for d in degs) + ")"
    if face.degree == 3:
        low = [u for u in face.corners if g.degree(u) == 3]
        if min(degs) < 3:
            return ("3-face", pattern, False, "corner of degree < 3")
        if len(low) > 1:
            return ("3-face", pattern, False, "two degree-3 corners are adjacent")
        if len(low) == 1:
            u = low[0]
            off = [w for w in g.adjacency[u] if not face.contains_vertex(w)]
            if len(off) != 1 or g.degree(off[0]) < 4:
                return ("3-face", pattern, False,
                        f"off-face neighbor of {u} is not a 4+-vertex")
        return ("3-face", pattern, True, "")
    if face.degree >= 5:
        if min(degs, default=3) < 3:
            return ("5+-face", pattern, False, "corner of degree < 3")
        for (a, b) in face.walk:
            if g.degree(a) == 3 and g.degree(b) == 3:
                return ("5+-face", pattern, False,
                        f"boundary edge ({a},{b}) joins two degree-3 vertices")
        return ("5+-face", pattern, True, "")
    return (f"{face.degree}-face", pattern, False, "no case for this face degree")


def _fully_compliant(pg: PlaneGraph) -> bool:
    g = pg.graph
    if g.n == 0:
        return False
    if any(g.degree(v) < 3 for v in range(g.n)):
        return False
    for u, v in g.edges:
        if g.degree(u) == 3 and g.degree(v) == 3:
            return False
    for v in range(g.n):
        if g.degree(v) == 4 and len(_three_neighbors(pg, v)) > 2:
            return False
    return True


def audit_cases(pg: PlaneGraph, ledger: ChargeLedger) -> AuditReport:
    """Classify every element and check finals in compliant neighborhoods.

    Raises ``TheoremViolationError`` on a graph satisfying all structural
    requirements everywhere: no such plane graph without 4-/6-cycles can
    exist (its final charges would all be nonnegative yet sum to -12), so
    meeting one means a bug upstream or an invalid embedding.
    """
    if has_forbidden_cycles(pg.graph):
        raise ForbiddenCyclePresentError("graph contains a 4-cycle or 6-cycle")
    if _fully_compliant(pg):
        raise TheoremViolationError(
            "graph satisfies every structural requirement; this contradicts "
            "the -12 total",
            graph=pg.graph,
        )
    finals = ledger.finals()
    entries: list[AuditEntry] = []
    for v in range(pg.graph.n):
        case, pattern, compliant, reason = _vertex_entry(pg, v)
        element: Element = ("vertex", v)
        entries.append(
            AuditEntry(
                element=element,
                case=case,
                pattern=pattern,
                compliant=compliant,
                reason=reason,
                initial=ledger.initial(element),
                incoming=ledger.incoming(element),
                outgoing=ledger.outgoing(element),
                final=finals[element],
            )
        )
    for face in pg.faces:
        case, pattern, compliant, reason = _face_entry(pg, face)
        element = ("face", face.index)
        entries.append(
            AuditEntry(
                element=element,
                case=case,
                pattern=pattern,
                compliant=compliant,
                reason=reason,
                initial=ledger.initial(element),
                incoming=ledger.incoming(element),
                outgoing=ledger.outgoing(element),
                final=finals[element],
            )
        )
    return AuditReport(
        entries=tuple(entries),
        initial_total=ledger.initial_total,
        final_total=sum(finals.values()),
    )


@dataclass(frozen=True)
class FaceThreesEntry:
    face_index: int
    degree: int
    three_count: int
    bound: int

    @property
    def passed(self) -> bool:
        return self.three_count <= self.bound


@dataclass(frozen=True)
class FaceThreesReport:
    entries: tuple[FaceThreesEntry, ...]

    @property
    def all_pass(self) -> bool:
        return all(e.passed for e in self.entries)


def check_face_threes(pg: PlaneGraph) -> FaceThreesReport:
    """Per-face count of incident degree-3 vertices against floor(deg/2).

    Requires that no two degree-3 vertices are adjacent anywhere in the
    graph; under that hypothesis degree-3 corners cannot be consecutive
    on a walk, which forces the bound.
    """
    g = pg.graph
    for u, v in g.edges:
        if g.degree(u) == 3 and g.degree(v) == 3:
            raise HypothesisViolatedError(
                f"adjacent degree-3 vertices {u} and {v}"
            )
    entries = []
    for face in pg.faces:
        count = sum(
            mult
            for v, mult in face.vertex_multiplicity.items()
            if g.degree(v) == 3
        )
        entries.append(
            FaceThreesEntry(
                face_index=face.index,
                degree=face.degree,
                three_count=count,
                bound=face.degree // 2,
            )
        )
    return FaceThreesReport(entries=tuple(entries))
