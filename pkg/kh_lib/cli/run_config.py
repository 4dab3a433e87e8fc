import argparse
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import psutil

from ..base.kh_types import Algorithm, OutputFormat, ResourceCaps
from ..diagram.braid import DEFAULT_SEED


@dataclass
class RunConfig:
    """
    Settings of one command line run.

    Built from the parsed command line by :meth:`from_namespace`. Every field
    has a documented default so library callers can construct it directly.

    Attributes:
        algorithm (Algorithm): Homology engine, ``auto`` picks dense up to
            ``max_crossings`` crossings and scanning above.
        reduced (bool): Compute reduced homology (``compute`` only).
        cable_n (int): Number of cable strands.
        max_crossings (int): Crossing cap of the dense engine.
        generator_budget (int): Object budget of the scanning engine.
        memory_budget_mb (int): Resident memory budget in MiB.
        oracle_cap (int): Crossing cap of the Kauffman bracket oracle.
        output_format (OutputFormat): ``json`` or ``text``.
        mirror (bool): Work on the mirror of the input.
        seed (int): Seed for random diagrams.
        jobs (int): Worker processes of a batch run.
        table (Path | None): Knot table file, None for the bundled table.
        include_expensive (bool): Run table rows marked expensive.
        random_rows (int): Seeded random knots appended to a batch run.

    Example:
        >>> cfg = RunConfig(algorithm=Algorithm.SCAN, max_crossings=12)
        >>> cfg.caps.max_crossings
        12
    """
    DEFAULT_CABLE_N = 2
    DEFAULT_MAX_CROSSINGS = 10
    DEFAULT_GENERATOR_BUDGET = 2_000_000
    DEFAULT_MEMORY_BUDGET_MB = 4096
    DEFAULT_ORACLE_CAP = 20

    algorithm: Algorithm = Algorithm.AUTO
    reduced: bool = False
    cable_n: int = DEFAULT_CABLE_N
    max_crossings: int = DEFAULT_MAX_CROSSINGS
    generator_budget: int = DEFAULT_GENERATOR_BUDGET
    memory_budget_mb: int = DEFAULT_MEMORY_BUDGET_MB
    oracle_cap: int = DEFAULT_ORACLE_CAP
    output_format: OutputFormat = OutputFormat.TEXT
    mirror: bool = False
    seed: int = DEFAULT_SEED
    jobs: Optional[int] = None
    table: Optional[Path] = None
    include_expensive: bool = False
    random_rows: int = 0

    def __post_init__(self):
        self.algorithm = Algorithm(self.algorithm)
        self.output_format = OutputFormat(self.output_format)
        if self.cable_n < 1:
            raise ValueError(f"Cable needs at least one strand, got {self.cable_n}")
        if self.random_rows < 0:
            raise ValueError(f"Number of random rows must be nonnegative, got {self.random_rows}")
        if self.jobs is None:
            self.jobs = psutil.cpu_count(logical=True) or 1
        if self.jobs < 1:
            raise ValueError(f"Batch needs at least one worker, got {self.jobs}")
        # validates the caps
        self.caps

    @property
    def caps(self) -> ResourceCaps:
        """The resource caps of this run."""
        return ResourceCaps(
            max_crossings=self.max_crossings,
            generator_budget=self.generator_budget,
            memory_budget_mb=self.memory_budget_mb,
            oracle_cap=self.oracle_cap,
        )

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        """Build the configuration from parsed command line arguments.

        Options missing from ``args`` keep their defaults.
        """
        mapping = {
            "algorithm": "algorithm",
            "reduced": "reduced",
            "cable": "cable_n",
            "max_crossings": "max_crossings",
            "budget": "generator_budget",
            "budget_mb": "memory_budget_mb",
            "oracle_cap": "oracle_cap",
            "format": "output_format",
            "mirror": "mirror",
            "seed": "seed",
            "jobs": "jobs",
            "table": "table",
            "include_expensive": "include_expensive",
            "random": "random_rows",
        }
        values = {}
        for option, name in mapping.items():
            value = getattr(args, option, None)
            if value is not None:
                values[name] = value
        if "table" in values:
            values["table"] = Path(values["table"])
        return cls(**values)
