"""DP-coloring toolkit.

Covers and representative sets generalize list coloring: above every
vertex sits a fiber of (vertex, color) pairs, edges carry matchings
between fibers, and a coloring picks one pair per fiber so that few
matching edges are hit.  This package provides exact solvers for that
model, plane embeddings with face tracing, a constructive coloring
pipeline for plane graphs without 4- or 6-cycles (lists of size 3,
impropriety at most 1), and an exact integer discharging auditor.
"""

from .catalog import load as load_catalog, load_all as load_catalog_all
from .covers import (
    Cover,
    CoverViolation,
    diagonal_cover,
    enumerate_perfect_covers,
    random_cover,
    uniform_assignment,
    validate_cover,
)
from .discharging import (
    AuditReport,
    ChargeLedger,
    apply_rules,
    audit_cases,
    charge_str,
    check_face_threes,
    initial_charges,
)
from .embedding import (
    Face,
    PlaneGraph,
    check_propositions,
    pendant_3faces,
    shared_edge_count,
    trace_faces,
)
from .errors import DpColorError
from .generate import generate_plane_no46
from .graphs import (
    Graph,
    build_graph,
    cross_edges,
    has_cycle_of_length,
    induced_subgraph,
    is_connected,
    list_cycles,
)
from .reduction import (
    ConfigKind,
    PipelineResult,
    ReducibleConfig,
    ResidualInstance,
    color_planar_no46,
    find_reducible_config,
    merge,
    residual,
    restrict,
    verify_config_reducible,
)
from .solver import (
    Colorability,
    brute_force_rep_set,
    dp_chromatic,
    find_rep_set,
    impropriety,
    is_dp_colorable,
    list_relaxed_colorable,
    max_impropriety,
)

__all__ = [
    "AuditReport",
    "ChargeLedger",
    "Colorability",
    "ConfigKind",
    "Cover",
    "CoverViolation",
    "DpColorError",
    "Face",
    "Graph",
    "PipelineResult",
    "PlaneGraph",
    "ReducibleConfig",
    "ResidualInstance",
    "apply_rules",
    "audit_cases",
    "brute_force_rep_set",
    "build_graph",
    "charge_str",
    "check_face_threes",
    "check_propositions",
    "color_planar_no46",
    "cross_edges",
    "diagonal_cover",
    "dp_chromatic",
    "enumerate_perfect_covers",
    "find_reducible_config",
    "find_rep_set",
    "generate_plane_no46",
    "has_cycle_of_length",
    "impropriety",
    "induced_subgraph",
    "initial_charges",
    "is_connected",
    "is_dp_colorable",
    "list_cycles",
    "list_relaxed_colorable",
    "load_catalog",
    "load_catalog_all",
    "max_impropriety",
    "merge",
    "pendant_3faces",
    "random_cover",
    "residual",
    "restrict",
    "shared_edge_count",
    "trace_faces",
    "uniform_assignment",
    "validate_cover",
    "verify_config_reducible",
]

__version__ = "0.1.0"
