from dataclasses import dataclass
from enum import Enum


class Label(str, Enum):
    """
    Enumeration of the two basis elements of the Frobenius algebra V.

    Every circle of a resolution carries one of these labels. ``V`` has rank 2
    over Z/2 with unit ``1`` and the nilpotent ``x`` (``x * x = 0``).

    Attributes:
        ONE ("1"): The unit. Contributes +1 to the quantum grading.
        X ("x"): The nilpotent generator. Contributes -1 to the quantum grading.
    """
    ONE = "1"
    X = "x"

    @property
    def degree(self) -> int:
        """Quantum degree contribution of the label (+1 for ``1``, -1 for ``x``)."""
        return 1 if self is Label.ONE else -1

    def __str__(self):
        return self.value


class Algorithm(str, Enum):
    """
    Enumeration of the homology engines.

    Attributes:
        DENSE: Full cube of resolutions followed by GF(2) ranks per bidegree.
            - Enumerates all 2^c resolution states
            - Limited by the crossing cap
            - Serves as the oracle for the scanning engine

        SCAN: Crossing-by-crossing tangle scanning with delooping and
            Gaussian cancellation.
            - Keeps intermediate complexes near-minimal
            - Limited by the generator and memory budgets
            - Required for 2-cables of nontrivial knots

        AUTO: Dense when the diagram is within the dense crossing cap,
            scanning otherwise.
    """
    DENSE = "dense"
    SCAN = "scan"
    AUTO = "auto"

    def __str__(self):
        return self.value


class OutputFormat(str, Enum):
    """
    Output formats of the command line front end.

    Attributes:
        JSON: One JSON object per report (machine readable, round-trippable).
        TEXT: Aligned Betti table grids and summary lines.
    """
    JSON = "json"
    TEXT = "text"

    def __str__(self):
        return self.value


class Verdict(str, Enum):
    """
    Outcome of unknot detection on a Seifert-framed 2-cable.

    Attributes:
        UNKNOT: Unreduced rank of the 2-cable is exactly 4.
        NONTRIVIAL: Unreduced rank is even and at least 12.
        ERROR: Any other rank. This contradicts the detection theorem and
            therefore signals an implementation bug.
    """
    UNKNOT = "unknot"
    NONTRIVIAL = "nontrivial"
    ERROR = "error"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ResourceCaps:
    """
    Resource caps shared by the homology engines and the oracles.

    Attributes:
        max_crossings (int): Largest diagram handled by the dense cube. The
            ``auto`` algorithm selects the dense engine up to this size.
        generator_budget (int): Largest number of generators (dense) or
            intermediate objects (scan) a computation may hold.
        memory_budget_mb (int): Resident memory limit of the process in MiB,
            checked after every scanning step, and the limit on the dense
            boundary matrices.
        oracle_cap (int): Largest diagram for the Kauffman bracket state sum.

    Example:
        >>> caps = ResourceCaps(max_crossings=12)
        >>> caps.generator_budget
        2000000
    """
    max_crossings: int = 10
    generator_budget: int = 2_000_000
    memory_budget_mb: int = 4096
    oracle_cap: int = 20

    def __post_init__(self):
        for name in ("max_crossings", "generator_budget", "memory_budget_mb", "oracle_cap"):
            if getattr(self, name) <= 0:
                raise ValueError(f"Resource cap {name} must be positive, got {getattr(self, name)}")
