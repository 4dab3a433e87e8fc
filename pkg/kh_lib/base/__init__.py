from .kh_types import Algorithm, Label, OutputFormat, ResourceCaps, Verdict
from .morphism_cache import MorphismCache
from .polynomials import A, q, from_terms, laurent_terms, format_laurent
from .exceptions import (
    KhovanovError,
    DiagramError,
    PDSyntaxError,
    EdgeMultiplicityError,
    OrientationError,
    UnknownEdgeError,
    MissingBasepointError,
    NotAKnotError,
    ResolutionError,
    InsertionLocusError,
    KnotTableError,
    ResourceLimitError,
    CrossingCapExceeded,
    GeneratorBudgetExceeded,
    MemoryBudgetExceeded,
    InvariantViolation,
    GradingError,
    BoundarySquareError,
    TheoremViolation,
    ExitCode,
)

__all__ = [
    "Algorithm",
    "Label",
    "OutputFormat",
    "ResourceCaps",
    "Verdict",
    "MorphismCache",
    "A",
    "q",
    "from_terms",
    "laurent_terms",
    "format_laurent",
    "KhovanovError",
    "DiagramError",
    "PDSyntaxError",
    "EdgeMultiplicityError",
    "OrientationError",
    "UnknownEdgeError",
    "MissingBasepointError",
    "NotAKnotError",
    "ResolutionError",
    "InsertionLocusError",
    "KnotTableError",
    "ResourceLimitError",
    "CrossingCapExceeded",
    "GeneratorBudgetExceeded",
    "MemoryBudgetExceeded",
    "InvariantViolation",
    "GradingError",
    "BoundarySquareError",
    "TheoremViolation",
    "ExitCode",
]
