from .gf2 import WORD_BITS, pack_rows, rank_gf2
from .betti import BettiTable, betti, poincare_polynomial, tensor_with_v, mirror_table
from .resource_guard import ResourceGuard
from .homology_engine import ENGINE_REGISTRY, HomologyEngine
from .dense_engine import DenseEngine
from .scan_engine import ScanEngine
from .engine_factory import EngineFactory
from .scan import scan_compute

__all__ = [
    # Linear algebra
    "WORD_BITS",
    "pack_rows",
    "rank_gf2",

    # Betti tables
    "BettiTable",
    "betti",
    "poincare_polynomial",
    "tensor_with_v",
    "mirror_table",

    # Engines
    "ResourceGuard",
    "ENGINE_REGISTRY",
    "HomologyEngine",
    "DenseEngine",
    "ScanEngine",
    "EngineFactory",
    "scan_compute",
]
