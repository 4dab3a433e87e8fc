"""
JSON and text rendering of detection reports.

The JSON form is one object per report::

    {"name": ..., "crossings": ..., "cable_crossings": ...,
     "betti": [{"i": ..., "j": ..., "rank": ...}], "total_rank": ...,
     "reduced_rank": ..., "euler": [{"exp": ..., "coeff": ...}],
     "verdict": ..., "colored_interval": [lo, hi],
     "checks": [{"name": ..., "pass": ...}], "timings_ms": {...}, "error": ...}

:func:`report_from_dict` reverses :func:`report_to_dict`.
"""

import json
from collections import Counter
from typing import Any, Iterable

from ..base.exceptions import ExitCode
from ..base.kh_types import Verdict
from ..base.polynomials import format_laurent, from_terms, laurent_terms
from ..homology.betti import BettiTable
from ..invariants.detection import (
    NONTRIVIAL_COLORED_RANK,
    UNKNOT_COLORED_RANK,
    DetectionReport,
    OracleCheck,
)


def report_to_dict(report: DetectionReport) -> dict[str, Any]:
    return {
        "name": report.name,
        "crossings": report.crossings,
        "cable_crossings": report.cable_crossings,
        "cable_n": report.cable_n,
        "betti": [{"i": i, "j": j, "rank": r} for i, j, r in report.betti.rows()],
        "total_rank": report.total_rank,
        "reduced_rank": report.reduced_rank,
        "euler": None if report.euler is None else [
            {"exp": e, "coeff": c} for e, c in laurent_terms(report.euler).items()
        ],
        "verdict": None if report.verdict is None else report.verdict.value,
        "colored_interval": None if report.colored_interval is None else list(report.colored_interval),
        "checks": [{"name": check.name, "pass": check.passed} for check in report.checks],
        "timings_ms": dict(report.timings_ms),
        "error": report.error,
        "exit_code": int(report.exit_code),
    }


def report_from_dict(data: dict[str, Any]) -> DetectionReport:
    """Rebuild a report from its JSON object.

    Raises:
        KeyError: If ``name`` is missing.
        ValueError: If a verdict or exit code is unknown.
    """
    euler = data.get("euler")
    verdict = data.get("verdict")
    interval = data.get("colored_interval")
    return DetectionReport(
        name=data["name"],
        crossings=data.get("crossings", 0),
        cable_crossings=data.get("cable_crossings"),
        cable_n=data.get("cable_n"),
        betti=BettiTable.from_rows((row["i"], row["j"], row["rank"]) for row in data.get("betti", [])),
        total_rank=data.get("total_rank"),
        reduced_rank=data.get("reduced_rank"),
        euler=None if euler is None else from_terms((t["exp"], t["coeff"]) for t in euler),
        verdict=None if verdict is None else Verdict(verdict),
        colored_interval=None if interval is None else (interval[0], interval[1]),
        checks=[OracleCheck(c["name"], c["pass"]) for c in data.get("checks", [])],
        timings_ms=dict(data.get("timings_ms", {})),
        error=data.get("error"),
        exit_code=ExitCode(data.get("exit_code", 0)),
    )


def report_to_json(report: DetectionReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=False)


def report_from_json(text: str) -> DetectionReport:
    return report_from_dict(json.loads(text))


def format_betti_grid(table: BettiTable) -> str:
    """Aligned grid of ranks: rows ``j`` descending, columns ``i`` ascending.

    Zero entries are shown as ``.``.

    Example:
        >>> print(format_betti_grid(BettiTable({(0, 1): 1, (0, -1): 1})))
        j\\i  0
          1  1
         -1  1
    """
    if not table.ranks:
        return "(zero)"
    columns = list(range(min(table.homological_degrees), max(table.homological_degrees) + 1))
    rows = sorted(table.quantum_degrees, reverse=True)
    cells = [["j\\i"] + [str(i) for i in columns]]
    for j in rows:
        cells.append([str(j)] + [str(table.rank(i, j) or ".") for i in columns])
    widths = [max(len(row[k]) for row in cells) for k in range(len(cells[0]))]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip()
        for row in cells
    )


def format_text(report: DetectionReport) -> str:
    """Human readable report: grid, totals, polynomials, verdict and checks."""
    lines = [f"== {report.name} ({report.crossings} crossings)"]
    if report.cable_crossings is not None:
        lines.append(f"Seifert-framed {report.cable_n}-cable: {report.cable_crossings} crossings")
    if report.error is not None:
        lines.append(f"error: {report.error}")
        return "\n".join(lines)

    lines.append(format_betti_grid(report.betti))
    lines.append(f"total rank: {report.total_rank}")
    if report.reduced_rank is not None:
        lines.append(f"reduced rank: {report.reduced_rank}")
    lines.append(f"Poincare polynomial: {report.betti.format_poincare()}")
    if report.euler is not None:
        lines.append(f"Euler characteristic: {format_laurent(report.euler)}")
    if report.verdict is not None:
        lines.append(f"verdict: {report.verdict}")
    if report.colored_interval is not None:
        lo, hi = report.colored_interval
        note = ""
        if report.verdict is Verdict.UNKNOT:
            note = f" (unknot value {UNKNOT_COLORED_RANK})"
        elif report.verdict is Verdict.NONTRIVIAL:
            note = f" (nontrivial knots have at least {NONTRIVIAL_COLORED_RANK})"
        lines.append(f"colored rank interval: [{lo}, {hi}]{note}")
    for check in report.checks:
        lines.append(f"check {check.name}: {'pass' if check.passed else 'FAIL'}")
    if report.timings_ms:
        lines.append("timings: " + ", ".join(f"{k} {v:.1f} ms" for k, v in report.timings_ms.items()))
    return "\n".join(lines)


def summary_line(reports: Iterable[DetectionReport]) -> str:
    """Counts of verdicts and errors of a batch, e.g. ``3 unknot, 2 nontrivial``."""
    reports = list(reports)
    counts = Counter(str(r.verdict) for r in reports if r.verdict is not None)
    errors = sum(1 for r in reports if r.error is not None)
    parts = [f"{len(reports)} rows"]
    parts += [f"{counts[v.value]} {v.value}" for v in Verdict if counts[v.value]]
    if errors:
        parts.append(f"{errors} failed")
    return ", ".join(parts)
