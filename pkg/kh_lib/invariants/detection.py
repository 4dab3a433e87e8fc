import logging
import time
from dataclasses import dataclass, field
from typing import Optional

import sympy as sp

from ..base.exceptions import (
    ExitCode,
    InvariantViolation,
    NotAKnotError,
    ResourceLimitError,
    TheoremViolation,
)
from ..base.kh_types import Algorithm, ResourceCaps, Verdict
from ..cable.cabling import seifert_framed_cable
from ..diagram.link_diagram import LinkDiagram, linking_number, with_default_basepoint
from ..homology.betti import BettiTable
from ..homology.engine_factory import EngineFactory
from .jones import determinant_check, graded_euler, kauffman_jones, normalized_jones

# Global module locker
logger = logging.getLogger(__name__)

UNKNOT_CABLE_RANK = 4
"""Unreduced rank of the Seifert-framed 2-cable of the unknot."""

NONTRIVIAL_CABLE_RANK = 12
"""Smallest unreduced 2-cable rank of a nontrivial knot."""

UNKNOT_COLORED_RANK = 3
NONTRIVIAL_COLORED_RANK = 11


@dataclass(frozen=True)
class OracleCheck:
    """Outcome of one named consistency check.

    Attributes:
        name (str): Check identifier, e.g. ``euler_vs_kauffman``.
        passed (bool): Whether the check passed.
    """
    name: str
    passed: bool


@dataclass
class DetectionReport:
    """
    Result of a homology or detection run on one input.

    ``compute`` runs fill the Betti table of the input itself and leave the
    cable fields empty; ``detect`` runs describe the Seifert-framed cable.
    A run stopped by a resource limit or a bad input has ``error`` set and no
    verdict.

    Attributes:
        name (str): Input name.
        crossings (int): Crossings of the input diagram.
        cable_crossings (int | None): Crossings of the cable, if one was built.
        cable_n (int | None): Number of cable strands.
        betti (BettiTable): Unreduced table of the computed diagram, or the
            reduced one for reduced ``compute`` runs.
        total_rank (int | None): Total rank of ``betti``.
        reduced_rank (int | None): Total reduced rank, if computed.
        euler (sympy.Expr | None): Graded Euler characteristic of ``betti``.
        verdict (Verdict | None): Detection outcome, only for 2-cables.
        colored_interval (tuple[int, int] | None): Range of the colored rank.
        checks (list[OracleCheck]): Consistency checks that were run.
        timings_ms (dict[str, float]): Wall clock time per phase.
        error (str | None): Message of the error that stopped the run.
        exit_code (ExitCode): Outcome class of the run.
    """
    name: str
    crossings: int = 0
    cable_crossings: Optional[int] = None
    cable_n: Optional[int] = None
    betti: BettiTable = field(default_factory=BettiTable)
    total_rank: Optional[int] = None
    reduced_rank: Optional[int] = None
    euler: Optional[sp.Expr] = None
    verdict: Optional[Verdict] = None
    colored_interval: Optional[tuple[int, int]] = None
    checks: list[OracleCheck] = field(default_factory=list)
    timings_ms: dict[str, float] = field(default_factory=dict)
    error: Optional[str] = None
    exit_code: ExitCode = ExitCode.OK

    @property
    def all_checks_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> Optional[bool]:
        """Result of the named check, None if it was not run."""
        for check in self.checks:
            if check.name == name:
                return check.passed
        return None

    def finalize(self) -> "DetectionReport":
        """Derive ``exit_code`` from verdict and checks of a completed run."""
        if self.error is None:
            if self.verdict is Verdict.ERROR or not self.all_checks_passed:
                self.exit_code = ExitCode.INVARIANT_VIOLATION
            else:
                self.exit_code = ExitCode.OK
        return self


class _Stopwatch:
    def __init__(self, timings: dict[str, float], phase: str):
        self.timings = timings
        self.phase = phase

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.timings[self.phase] = round((time.perf_counter() - self.start) * 1000, 3)
        return False


def verdict(unreduced_rank: int) -> Verdict:
    """Classify the unreduced rank of a Seifert-framed 2-cable.

    Returns:
        UNKNOT for rank 4, NONTRIVIAL for even ranks of at least 12 and ERROR
        for every other value.
    """
    if unreduced_rank == UNKNOT_CABLE_RANK:
        return Verdict.UNKNOT
    if unreduced_rank >= NONTRIVIAL_CABLE_RANK and unreduced_rank % 2 == 0:
        return Verdict.NONTRIVIAL
    return Verdict.ERROR


def colored_rank_interval(unreduced_cable_rank: int) -> tuple[int, int]:
    """Interval containing the rank of the colored homology.

    The colored rank differs from the unreduced 2-cable rank by at most 1.
    Unknot runs therefore contain the unknot's colored rank 3 and nontrivial
    runs start at 11 or above.

    Args:
        unreduced_cable_rank: Unreduced rank of the 2-cable.

    Returns:
        ``(rank - 1, rank + 1)``

    Raises:
        ValueError: If the rank is not positive.

    Example:
        >>> colored_rank_interval(4)
        (3, 5)
    """
    if unreduced_cable_rank <= 0:
        raise ValueError(f"A nonempty link has positive rank, got {unreduced_cable_rank}")
    return unreduced_cable_rank - 1, unreduced_cable_rank + 1


def rank_splitting_check(unreduced: BettiTable, reduced: BettiTable) -> bool:
    """True if the unreduced table equals the reduced one tensored with V.

    Over Z/2 this holds bidegree by bidegree for every link.
    """
    return unreduced == reduced.tensor_with_v()


def _same_polynomial(a: sp.Expr, b: sp.Expr) -> bool:
    return sp.expand(a - b) == 0


def _jones_oracle(d: LinkDiagram, caps: ResourceCaps) -> Optional[sp.Expr]:
    if d.crossing_count > caps.oracle_cap:
        logger.warning("Skipping the Kauffman bracket oracle: %s crossings exceed the cap of %s",
                       d.crossing_count, caps.oracle_cap)
        return None
    return kauffman_jones(d, caps.oracle_cap)


def _determinant_vanishes(cable: LinkDiagram, p: sp.Expr) -> bool:
    try:
        return determinant_check(cable, p)
    except ValueError as e:
        raise InvariantViolation(f"No determinant from the cable's Jones polynomial: {e}") from e


def compute_report(
    d: LinkDiagram,
    name: str = "input",
    reduced: bool = False,
    algorithm: Algorithm | str = Algorithm.AUTO,
    caps: Optional[ResourceCaps] = None,
    run_checks: bool = True,
) -> DetectionReport:
    """Betti table of a diagram with its Euler characteristic and oracle check.

    Args:
        d: The diagram.
        name: Name written to the report.
        reduced: Compute reduced homology. Without a basepoint the smallest
            edge is marked.
        algorithm: Homology engine, ``auto`` by default.
        caps: Resource caps.
        run_checks: Compare the Euler characteristic with the Kauffman
            bracket when the diagram is within the oracle cap.

    Returns:
        The report. Resource limits are recorded in it instead of raised.
    """
    caps = caps if caps is not None else ResourceCaps()
    report = DetectionReport(name=name, crossings=d.crossing_count)
    if reduced:
        d = with_default_basepoint(d)
    engine = EngineFactory.for_diagram(algorithm, d, caps)
    try:
        with _Stopwatch(report.timings_ms, "homology"):
            table = engine.compute(d, reduced)
    except ResourceLimitError as e:
        logger.info("%s stopped by a resource limit: %s", name, e)
        report.error, report.exit_code = str(e), ExitCode.RESOURCE_LIMIT
        return report

    report.betti = table
    report.total_rank = table.total
    report.reduced_rank = table.total if reduced else None
    report.euler = graded_euler(table)
    if run_checks:
        with _Stopwatch(report.timings_ms, "oracles"):
            jones = _jones_oracle(d, caps)
            if jones is not None:
                expected = normalized_jones(jones) if reduced else jones
                report.checks.append(OracleCheck("euler_vs_kauffman", _same_polynomial(report.euler, expected)))
    return report.finalize()


def detect_cable_ranks(
    d: LinkDiagram,
    n: int = 2,
    name: str = "input",
    algorithm: Algorithm | str = Algorithm.AUTO,
    caps: Optional[ResourceCaps] = None,
    run_checks: bool = True,
) -> DetectionReport:
    """Khovanov ranks of the Seifert-framed ``n``-cable of a knot.

    Computes unreduced and reduced homology of the cable and runs the
    consistency checks. A verdict and colored interval are only produced for
    ``n = 2``.

    Checks:
        - ``rank_doubling``: unreduced total is twice the reduced total
        - ``v_splitting``: unreduced table is the reduced table tensored with V
        - ``linking_zero``: cable components are pairwise unlinked
        - ``euler_vs_kauffman``: Euler characteristic equals the bracket
          oracle, if the cable is within the oracle cap
        - ``determinant_zero``: the cable's determinant vanishes (``n = 2``)

    Args:
        d: A knot diagram.
        n: Number of cable strands.
        name: Name written to the report.
        algorithm: Homology engine, ``auto`` by default.
        caps: Resource caps.
        run_checks: Whether to run the checks.

    Returns:
        The report. Resource limits are recorded in it instead of raised.

    Raises:
        NotAKnotError: If ``d`` has more than one component.
        TheoremViolation: If the 2-cable rank is neither 4 nor an even number
            of at least 12.
        InvariantViolation: If no determinant can be extracted from the
            cable's Jones polynomial.
    """
    if not d.is_knot:
        raise NotAKnotError(f"Detection needs a knot, {name} has {d.component_count} components")
    caps = caps if caps is not None else ResourceCaps()
    report = DetectionReport(name=name, crossings=d.crossing_count, cable_n=n)

    with _Stopwatch(report.timings_ms, "cable"):
        cable = seifert_framed_cable(with_default_basepoint(d), n)
    report.cable_crossings = cable.crossing_count
    engine = EngineFactory.for_diagram(algorithm, cable, caps)

    try:
        with _Stopwatch(report.timings_ms, "unreduced"):
            unreduced = engine.compute(cable)
        with _Stopwatch(report.timings_ms, "reduced"):
            reduced = engine.compute(cable, reduced=True)
    except ResourceLimitError as e:
        logger.info("%s stopped by a resource limit: %s", name, e)
        report.error, report.exit_code = str(e), ExitCode.RESOURCE_LIMIT
        return report

    report.betti = unreduced
    report.total_rank = unreduced.total
    report.reduced_rank = reduced.total
    report.euler = graded_euler(unreduced)
    if n == 2:
        report.verdict = verdict(unreduced.total)
        report.colored_interval = colored_rank_interval(unreduced.total)
        if report.verdict is Verdict.ERROR:
            logger.error("Forbidden 2-cable rank %s for %s", unreduced.total, name)
            raise TheoremViolation(
                f"{name}: unreduced 2-cable rank {unreduced.total} is neither {UNKNOT_CABLE_RANK} "
                f"nor an even number of at least {NONTRIVIAL_CABLE_RANK}"
            )

    if run_checks:
        with _Stopwatch(report.timings_ms, "oracles"):
            report.checks.append(OracleCheck("rank_doubling", unreduced.total == 2 * reduced.total))
            report.checks.append(OracleCheck("v_splitting", rank_splitting_check(unreduced, reduced)))
            report.checks.append(OracleCheck("linking_zero", all(
                linking_number(cable, a, b) == 0
                for a in range(cable.component_count) for b in range(a + 1, cable.component_count)
            )))
            jones = _jones_oracle(cable, caps)
            if jones is not None:
                report.checks.append(OracleCheck("euler_vs_kauffman", _same_polynomial(report.euler, jones)))
            if n == 2:
                report.checks.append(OracleCheck(
                    "determinant_zero", _determinant_vanishes(cable, jones if jones is not None else report.euler)
                ))
    report.finalize()
    logger.info("%s: %s-cable rank %s, verdict %s", name, n, report.total_rank, report.verdict)
    return report


def detect_unknot(
    d: LinkDiagram,
    name: str = "input",
    algorithm: Algorithm | str = Algorithm.AUTO,
    caps: Optional[ResourceCaps] = None,
    run_checks: bool = True,
) -> DetectionReport:
    """Decide whether a knot diagram represents the unknot.

    The unreduced Khovanov homology of the Seifert-framed 2-cable has rank 4
    for the unknot and an even rank of at least 12 for every other knot.

    Args:
        d: A knot diagram.
        name: Name written to the report.
        algorithm: Homology engine, ``auto`` by default.
        caps: Resource caps.
        run_checks: Whether to run the consistency checks.

    Returns:
        The report with verdict, ranks, colored interval and checks.

    Raises:
        NotAKnotError: If ``d`` has more than one component.
        TheoremViolation: If the 2-cable rank lies in the forbidden gap.

    Example:
        >>> detect_unknot(parse_pd("X[1,2,2,1]")).verdict
        <Verdict.UNKNOT: 'unknot'>
    """
    return detect_cable_ranks(d, 2, name, algorithm, caps, run_checks)
