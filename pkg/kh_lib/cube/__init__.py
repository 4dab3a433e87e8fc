from .resolution import ResolutionState, EdgeMap, EdgeMapKind, resolve, edge_map
from .chain_complex import (
    DENSE_CROSSING_CAP,
    Generator,
    BigradedComplex,
    group_sizes,
    boundary_bytes,
    build_complex,
    verify_square_zero,
    chain_euler,
)

__all__ = [
    # Resolutions
    "ResolutionState",
    "EdgeMap",
    "EdgeMapKind",
    "resolve",
    "edge_map",

    # Chain complexes
    "DENSE_CROSSING_CAP",
    "Generator",
    "BigradedComplex",
    "group_sizes",
    "boundary_bytes",
    "build_complex",
    "verify_square_zero",
    "chain_euler",
]
