"""
kh_lib - Khovanov Homology of Links and Cables over Z/2

This library computes Khovanov homology with coefficients in the two-element
field for oriented link diagrams given as PD codes, builds Seifert-framed
n-cables of knots, and decides whether a knot diagram represents the unknot:
the unreduced Khovanov homology of the Seifert-framed 2-cable has rank 4 for
the unknot and an even rank of at least 12 for every other knot.

Two homology engines are available. The dense engine enumerates the full cube
of resolutions and serves as the reference; the scanning engine adds one
crossing at a time, removes closed circles and cancels isomorphisms, which is
what makes cables of nontrivial knots computable.

Main Components:
    - Diagrams: PD parsing and serialization, mirror, disjoint union, braids
    - Cables: blackboard cables, full twists and the Seifert framing
    - Cube: resolutions, edge maps and the bigraded chain complex
    - Homology: GF(2) ranks, Betti tables, dense and scanning engines
    - Invariants: Kauffman bracket oracle, determinant, unknot detection
    - CLI: the ``kh-lib`` command with compute, detect, cable and table

Example:
    >>> from kh_lib import parse_pd, EngineFactory, Algorithm, detect_unknot
    >>> trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
    >>> EngineFactory.from_algorithm(Algorithm.DENSE).compute(trefoil).total
    6
    >>> report = detect_unknot(trefoil)
    >>> report.verdict, report.cable_crossings
    (<Verdict.NONTRIVIAL: 'nontrivial'>, 18)
"""

from .base import (
    Algorithm,
    Label,
    OutputFormat,
    ResourceCaps,
    Verdict,
    MorphismCache,
    from_terms,
    laurent_terms,
    format_laurent,
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
from .diagram import (
    Crossing,
    LinkDiagram,
    build_diagram,
    parse_pd,
    to_pd,
    writhe,
    mirror,
    disjoint_union,
    set_basepoint,
    relabel,
    linking_number,
    braid_closure,
    KnotTableRow,
    load_knot_table,
)
from .cable import (
    CableSpec,
    cable_spec,
    blackboard_cable,
    full_twist_insertion,
    seifert_framed_cable,
)
from .cube import (
    ResolutionState,
    BigradedComplex,
    resolve,
    edge_map,
    build_complex,
)
from .homology import (
    BettiTable,
    rank_gf2,
    betti,
    scan_compute,
    HomologyEngine,
    DenseEngine,
    ScanEngine,
    EngineFactory,
)
from .invariants import (
    DetectionReport,
    OracleCheck,
    graded_euler,
    kauffman_jones,
    normalized_jones,
    determinant,
    determinant_check,
    colored_rank_interval,
    detect_cable_ranks,
    detect_unknot,
)

__version__ = "0.0.1"

__all__ = [
    # Types and errors
    "Algorithm",
    "Label",
    "OutputFormat",
    "ResourceCaps",
    "Verdict",
    "MorphismCache",
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

    # Diagrams
    "Crossing",
    "LinkDiagram",
    "build_diagram",
    "parse_pd",
    "to_pd",
    "writhe",
    "mirror",
    "disjoint_union",
    "set_basepoint",
    "relabel",
    "linking_number",
    "braid_closure",
    "KnotTableRow",
    "load_knot_table",

    # Cables
    "CableSpec",
    "cable_spec",
    "blackboard_cable",
    "full_twist_insertion",
    "seifert_framed_cable",

    # Cube of resolutions
    "ResolutionState",
    "BigradedComplex",
    "resolve",
    "edge_map",
    "build_complex",

    # Homology
    "BettiTable",
    "rank_gf2",
    "betti",
    "scan_compute",
    "HomologyEngine",
    "DenseEngine",
    "ScanEngine",
    "EngineFactory",

    # Invariants and detection
    "DetectionReport",
    "OracleCheck",
    "graded_euler",
    "kauffman_jones",
    "normalized_jones",
    "determinant",
    "determinant_check",
    "colored_rank_interval",
    "detect_cable_ranks",
    "detect_unknot",
]
