import logging
import os
from typing import Optional

import psutil

from ..base.exceptions import GeneratorBudgetExceeded, MemoryBudgetExceeded

logger = logging.getLogger(__name__)

MIB = 1 << 20


class ResourceGuard:
    """Enforces the generator and memory budgets of a computation.

    The guard is consulted by the homology engines after every step that can
    grow the working set. Memory is measured as the resident set size of the
    current process.

    Example:
        >>> guard = ResourceGuard(generator_budget=1000, memory_budget_mb=2048)
        >>> guard.check_generators(10, "step 3")
        >>> guard.check_memory("step 3")
    """

    def __init__(self, generator_budget: Optional[int] = None, memory_budget_mb: Optional[int] = None):
        """Initialize the guard.

        Args:
            generator_budget: Largest number of generators or objects allowed,
                None for no limit.
            memory_budget_mb: Largest resident memory in MiB, None for no limit.
        """
        self.generator_budget = generator_budget
        self.memory_budget_mb = memory_budget_mb
        self.peak_generators = 0
        self._process = psutil.Process(os.getpid()) if memory_budget_mb is not None else None

    def check_generators(self, count: int, context: str = "") -> None:
        """Record a working set size and enforce the generator budget.

        Raises:
            GeneratorBudgetExceeded: If ``count`` exceeds the budget.
        """
        self.peak_generators = max(self.peak_generators, count)
        if self.generator_budget is not None and count > self.generator_budget:
            raise GeneratorBudgetExceeded(
                f"{count} generators exceed the budget of {self.generator_budget}"
                + (f" ({context})" if context else "")
            )

    def memory_mb(self) -> float:
        """Current resident memory of the process in MiB."""
        process = self._process or psutil.Process(os.getpid())
        return process.memory_info().rss / MIB

    def check_memory(self, context: str = "") -> None:
        """Enforce the memory budget.

        Raises:
            MemoryBudgetExceeded: If the resident memory exceeds the budget.
        """
        if self.memory_budget_mb is None:
            return
        used = self.memory_mb()
        if used > self.memory_budget_mb:
            raise MemoryBudgetExceeded(
                f"Resident memory {used:.0f} MiB exceeds the budget of {self.memory_budget_mb} MiB"
                + (f" ({context})" if context else "")
            )
        logger.debug("Memory check %s: %.0f MiB", context, used)
