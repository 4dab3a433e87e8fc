"""
Batch detection over knot tables.

Rows are scheduled as asyncio tasks bounded by a semaphore and executed in a
worker pool; results are written by the coordinating task one at a time. A
row that fails with a bad diagram or a resource limit is recorded and the
batch goes on. A row with a forbidden rank or a failed check stops the
batch: rows that have not started are skipped.
"""

import asyncio
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..base.exceptions import DiagramError, ExitCode, KhovanovError, NotAKnotError
from ..diagram.braid import random_knot_diagram
from ..diagram.knot_table import KnotTableRow, load_knot_table
from ..diagram.link_diagram import mirror
from ..diagram.pd_code import to_pd
from ..invariants.detection import DetectionReport, detect_cable_ranks
from .run_config import RunConfig

# Global module locker
logger = logging.getLogger(__name__)


@dataclass
class BatchResult:
    """
    Reports of a batch run in row order.

    Attributes:
        reports (list[DetectionReport]): Reports of the rows that ran.
        aborted (bool): True if a row stopped the batch.
    """
    reports: list[DetectionReport]
    aborted: bool = False

    @property
    def exit_code(self) -> ExitCode:
        """Most severe outcome of all rows, OK for an empty batch."""
        return max((r.exit_code for r in self.reports), default=ExitCode.OK)


def run_row(row: KnotTableRow, cfg: RunConfig) -> DetectionReport:
    """Compute one table row. Runs inside a worker process.

    Every row gets a detection report of its Seifert-framed cable. Rows with
    several components, declared or traced, fail with NotAKnotError like any
    other precondition. Library errors are turned into error reports.
    """
    try:
        d = row.diagram()
        if cfg.mirror:
            d = mirror(d)
        if not d.is_knot:
            raise NotAKnotError(f"Row {row.name} is a {d.component_count}-component link, detection needs a knot")
        if d.component_count != row.components:
            raise DiagramError(
                f"Row {row.name} declares {row.components} components, the diagram has {d.component_count}"
            )
        return detect_cable_ranks(d, cfg.cable_n, row.name, cfg.algorithm, cfg.caps)
    except KhovanovError as e:
        logger.info("Row %s failed: %s", row.name, e)
        return DetectionReport(
            name=row.name, error=f"{type(e).__name__}: {e}", exit_code=ExitCode.for_exception(e)
        )


def random_rows(count: int, seed: int) -> list[KnotTableRow]:
    """Seeded random knot diagrams as table rows named ``random_<k>``."""
    rng = np.random.default_rng(seed)
    return [
        KnotTableRow(name=f"random_{k}", pd=to_pd(random_knot_diagram(rng=rng)))
        for k in range(count)
    ]


def table_rows(cfg: RunConfig) -> list[KnotTableRow]:
    """Rows of the configured table followed by the requested random rows.

    Raises:
        KnotTableError: If the table cannot be read.
    """
    rows = load_knot_table(cfg.table, cfg.include_expensive)
    if cfg.random_rows:
        rows += random_rows(cfg.random_rows, cfg.seed)
    return rows


async def run_batch(
    rows: list[KnotTableRow],
    cfg: RunConfig,
    emit: Optional[Callable[[DetectionReport], None]] = None,
    executor: Optional[Executor] = None,
) -> BatchResult:
    """Run all rows on a bounded worker pool.

    Args:
        rows: Table rows.
        cfg: Run configuration; ``cfg.jobs`` bounds the rows in flight.
        emit: Called with every finished report, one call at a time.
        executor: Pool to run rows in. A process pool of ``cfg.jobs`` workers
            is created (and shut down) when omitted.

    Returns:
        The reports in row order and whether the batch was aborted.
    """
    semaphore = asyncio.Semaphore(cfg.jobs)
    output_lock = asyncio.Lock()
    aborted = asyncio.Event()
    loop = asyncio.get_running_loop()
    finished: dict[int, DetectionReport] = {}

    own_executor = executor is None
    pool = ProcessPoolExecutor(max_workers=cfg.jobs) if own_executor else executor

    async def run(index: int, row: KnotTableRow) -> None:
        async with semaphore:
            if aborted.is_set():
                logger.info("Skipping row %s after an aborted batch", row.name)
                return
            report = await loop.run_in_executor(pool, run_row, row, cfg)
        async with output_lock:
            finished[index] = report
            if emit is not None:
                emit(report)
            if report.exit_code is ExitCode.INVARIANT_VIOLATION:
                logger.error("Row %s violated an invariant, aborting the batch", row.name)
                aborted.set()

    try:
        await asyncio.gather(*(run(index, row) for index, row in enumerate(rows)))
    finally:
        if own_executor:
            pool.shutdown(wait=True, cancel_futures=True)

    reports = [finished[index] for index in sorted(finished)]
    logger.info("Batch finished: %s of %s rows", len(reports), len(rows))
    return BatchResult(reports, aborted.is_set())
