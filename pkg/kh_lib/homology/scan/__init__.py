from .cobordism import (
    IDENTITY,
    ZERO,
    Matching,
    Morphism,
    Surface,
    make_matching,
    gamma_circles,
    pattern_degree,
    compose,
)
from .tangle_complex import CROSSING_SHIFTS, TangleObject, TangleComplex, CrossingGlue
from .scanner import cut_open, scan_order, scan_compute

__all__ = [
    # Cobordisms
    "IDENTITY",
    "ZERO",
    "Matching",
    "Morphism",
    "Surface",
    "make_matching",
    "gamma_circles",
    "pattern_degree",
    "compose",

    # Tangle complexes
    "CROSSING_SHIFTS",
    "TangleObject",
    "TangleComplex",
    "CrossingGlue",

    # Scanning
    "cut_open",
    "scan_order",
    "scan_compute",
]
