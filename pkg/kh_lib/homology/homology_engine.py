import logging
from abc import ABC, abstractmethod
from typing import Optional

from ..base.kh_types import Algorithm, ResourceCaps
from ..diagram.link_diagram import LinkDiagram
from .betti import BettiTable
from .resource_guard import ResourceGuard

# Global module locker
logger = logging.getLogger(__name__)

# Registry for homology engine implementations
ENGINE_REGISTRY: dict[Algorithm, type["HomologyEngine"]] = {}


class HomologyEngine(ABC):
    """Abstract base class for Khovanov homology engines.

    An engine turns a link diagram into its Betti table over Z/2. Concrete
    engines differ in how they get there (full cube or tangle scanning) but
    must agree bidegree by bidegree on every diagram both can handle.

    Auto-Registration:
        Subclasses register themselves in ENGINE_REGISTRY when they define an
        ALGORITHM class attribute. :class:`EngineFactory` builds engines from
        this registry.

    Class Attributes:
        ALGORITHM (Algorithm | None): Registry key (set by subclasses).

    Instance Attributes:
        caps (ResourceCaps): Crossing cap and budgets of this engine.

    Example:
        >>> engine = EngineFactory.from_algorithm(Algorithm.DENSE)
        >>> engine.compute(parse_pd("U1")).total
        2
    """

    ALGORITHM: Algorithm | None = None  # To be set in subclasses

    def __init__(self, caps: Optional[ResourceCaps] = None):
        """Initialize the engine.

        Args:
            caps: Resource caps, the defaults of :class:`ResourceCaps` when omitted.
        """
        self.caps = caps if caps is not None else ResourceCaps()

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)

        if cls.ALGORITHM:
            ENGINE_REGISTRY[cls.ALGORITHM] = cls

    def make_guard(self) -> ResourceGuard:
        """A fresh resource guard for one computation."""
        return ResourceGuard(self.caps.generator_budget, self.caps.memory_budget_mb)

    @abstractmethod
    def compute(self, d: LinkDiagram, reduced: bool = False) -> BettiTable:
        """Compute the Betti table of a diagram.

        Args:
            d: The diagram.
            reduced: Compute reduced homology. Needs a basepoint.

        Returns:
            The Betti table.

        Raises:
            MissingBasepointError: If ``reduced`` is set without a basepoint.
            ResourceLimitError: If a cap or budget is exceeded.
        """

    def __repr__(self) -> str:
        return f"{type(self).__name__}(caps={self.caps})"
