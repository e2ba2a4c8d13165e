"""Exception types shared across the package.

Every contract violation raises a distinct class so callers (and the CLI)
can map failures to exit codes without string matching.
"""


class DpColorError(Exception):
    """Base class for all errors raised by this package."""


# --- graph construction ---------------------------------------------------

class LoopEdgeError(DpColorError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(DpColorError):
    """The same unordered edge was given twice."""


class IndexOutOfRangeError(DpColorError):
    """A vertex index is negative or >= the vertex count."""


class OverlappingSetsError(DpColorError):
    """Two vertex sets required to be disjoint intersect."""


class BadLengthError(DpColorError):
    """A cycle length below 3 was requested."""


# --- embeddings -----------------------------------------------------------

class InvalidRotationError(DpColorError):
    """A rotation is not a permutation of the vertex's neighbor set."""


class NonPlanarEmbeddingError(DpColorError):
    """Face tracing finished but the Euler identity |V|-|E|+|F|=2 failed."""


class DisconnectedError(DpColorError):
    """The operation requires a connected graph."""


class ForbiddenCyclePresentError(DpColorError):
    """The graph contains a 4-cycle or a 6-cycle where none is allowed."""


# --- covers and solving ---------------------------------------------------

class UnequalListsError(DpColorError):
    """A perfect matching was requested across lists of different sizes."""


class BudgetExceededError(DpColorError):
    """An exhaustive enumeration would exceed the caller's budget."""


class NotInListError(DpColorError):
    """A chosen color is not in the vertex's list."""


class PartialAssignmentError(DpColorError):
    """An assignment required to be total leaves some vertex unassigned."""


class EmptyListError(DpColorError):
    """Some vertex has an empty color list, so no assignment can exist.

    Kept distinct from a plain unsatisfiable answer: the instance is
    degenerate rather than merely uncolorable.
    """


# --- reduction pipeline ---------------------------------------------------

class ContractViolationError(DpColorError):
    """A merge precondition failed (stale color, cross conflict, or bound)."""


class TheoremViolationError(DpColorError):
    """No reducible configuration exists where one is guaranteed.

    Raised with the offending graph attached for inspection; seeing this on
    a connected plane graph without 4- or 6-cycles would contradict the
    structural guarantee the pipeline relies on.
    """

    def __init__(self, message, graph=None):
        super().__init__(message)
        self.graph = graph


class ListTooSmallError(DpColorError):
    """The coloring pipeline needs every list to have size at least 3."""


class HypothesisViolatedError(DpColorError):
    """A structural hypothesis of the requested check does not hold."""


# --- generation and I/O ---------------------------------------------------

class GenerationExhaustedError(DpColorError):
    """The instance generator ran out of attempts."""


class FileFormatError(DpColorError):
    """An input file does not match its declared format."""
