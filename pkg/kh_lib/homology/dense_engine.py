import logging

from ..base.kh_types import Algorithm
from ..cube.chain_complex import DENSE_CROSSING_CAP, build_complex
from ..diagram.link_diagram import LinkDiagram
from .betti import BettiTable, betti
from .homology_engine import HomologyEngine

logger = logging.getLogger(__name__)


class DenseEngine(HomologyEngine):
    """Homology from the full cube of resolutions.

    Builds all ``2**c`` resolution states and computes ranks per bidegree.
    Exact and simple, so it serves as the oracle for :class:`ScanEngine`.
    Diagrams above ``min(caps.max_crossings, DENSE_CROSSING_CAP)`` raise
    CrossingCapExceeded. The generator and memory budgets are checked on the
    group sizes before the cube is allocated.
    """

    ALGORITHM = Algorithm.DENSE

    @property
    def crossing_cap(self) -> int:
        return min(self.caps.max_crossings, DENSE_CROSSING_CAP)

    def compute(self, d: LinkDiagram, reduced: bool = False) -> BettiTable:
        logger.debug("Dense computation on %s crossings (reduced=%s)", d.crossing_count, reduced)
        complex_ = build_complex(
            d, reduced, self.crossing_cap, self.caps.generator_budget, self.caps.memory_budget_mb
        )
        return betti(complex_)
