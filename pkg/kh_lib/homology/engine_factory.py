import logging
from typing import Optional

from ..base.kh_types import Algorithm, ResourceCaps
from ..diagram.link_diagram import LinkDiagram
from .homology_engine import ENGINE_REGISTRY, HomologyEngine

# Importing the engines fills ENGINE_REGISTRY
from . import dense_engine, scan_engine  # noqa: F401

logger = logging.getLogger(__name__)


class EngineFactory:
    """Factory for homology engines.

    Engines register themselves in ENGINE_REGISTRY when their class is
    defined (via __init_subclass__), so the factory needs no explicit
    registration code.

    Two creation patterns are supported:
    1. Direct creation from an :class:`Algorithm` (``dense`` or ``scan``)
    2. Creation for a concrete diagram, which also resolves ``auto``

    Example:
        >>> engine = EngineFactory.from_algorithm(Algorithm.SCAN)
        >>> cable = seifert_framed_cable(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"), 2)
        >>> engine = EngineFactory.for_diagram(Algorithm.AUTO, cable)
        >>> type(engine).__name__
        'ScanEngine'
    """

    @staticmethod
    def from_algorithm(algorithm: Algorithm | str, caps: Optional[ResourceCaps] = None) -> HomologyEngine:
        """Create an engine for a concrete algorithm.

        Args:
            algorithm: ``dense`` or ``scan``. ``auto`` needs a diagram, see
                :meth:`for_diagram`.
            caps: Resource caps passed to the engine.

        Returns:
            The engine.

        Raises:
            ValueError: If the algorithm is unknown or ``auto``.
        """
        try:
            algorithm = Algorithm(algorithm)
        except ValueError:
            raise ValueError(f"Unsupported algorithm: {algorithm}") from None
        if algorithm not in ENGINE_REGISTRY:
            raise ValueError(f"Unsupported algorithm: {algorithm}")

        return ENGINE_REGISTRY[algorithm](caps)

    @staticmethod
    def resolve(algorithm: Algorithm | str, d: LinkDiagram, caps: Optional[ResourceCaps] = None) -> Algorithm:
        """Resolve ``auto`` to ``dense`` or ``scan`` for a diagram.

        ``auto`` picks the dense engine for diagrams with at most
        ``caps.max_crossings`` crossings.
        """
        caps = caps if caps is not None else ResourceCaps()
        algorithm = Algorithm(algorithm)
        if algorithm is not Algorithm.AUTO:
            return algorithm
        return Algorithm.DENSE if d.crossing_count <= caps.max_crossings else Algorithm.SCAN

    @staticmethod
    def for_diagram(algorithm: Algorithm | str, d: LinkDiagram, caps: Optional[ResourceCaps] = None) -> HomologyEngine:
        """Create the engine that will compute ``d``.

        Args:
            algorithm: ``dense``, ``scan`` or ``auto``.
            d: The diagram to compute.
            caps: Resource caps passed to the engine.

        Returns:
            The engine.

        Raises:
            ValueError: If the algorithm is unknown.
        """
        resolved = EngineFactory.resolve(algorithm, d, caps)
        logger.info("Selected %s engine for a %s-crossing diagram", resolved, d.crossing_count)
        return EngineFactory.from_algorithm(resolved, caps)
