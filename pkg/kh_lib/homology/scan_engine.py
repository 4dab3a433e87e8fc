import logging
from typing import Optional

from ..base.kh_types import Algorithm, ResourceCaps
from ..base.morphism_cache import MorphismCache
from ..diagram.link_diagram import LinkDiagram
from .betti import BettiTable
from .homology_engine import HomologyEngine
from .scan.scanner import scan_compute

logger = logging.getLogger(__name__)


class ScanEngine(HomologyEngine):
    """Homology by crossing-by-crossing tangle scanning.

    Each :meth:`compute` call uses its own :class:`MorphismCache` and
    :class:`ResourceGuard`, so one engine may serve several computations in
    sequence. The generator budget bounds the number of objects after every
    crossing, before cancellation.

    Attributes:
        verify_gradings (bool): Check all arrow gradings after each step.
        last_cache (MorphismCache | None): Cache of the most recent run.
        last_peak (int): Largest intermediate complex of the most recent run.
    """

    ALGORITHM = Algorithm.SCAN

    def __init__(self, caps: Optional[ResourceCaps] = None, verify_gradings: bool = False):
        super().__init__(caps)
        self.verify_gradings = verify_gradings
        self.last_cache: Optional[MorphismCache] = None
        self.last_peak = 0

    def compute(self, d: LinkDiagram, reduced: bool = False) -> BettiTable:
        guard = self.make_guard()
        cache = MorphismCache()
        try:
            return scan_compute(d, reduced, guard, cache, self.verify_gradings)
        finally:
            self.last_cache = cache
            self.last_peak = guard.peak_generators
            logger.debug("Scan run on %s crossings: peak %s objects, %r",
                         d.crossing_count, guard.peak_generators, cache)
