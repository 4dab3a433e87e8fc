"""
Command line front end of kh-lib.

Subcommands:
    compute  Betti table, Poincare polynomial and Euler characteristic of a diagram
    detect   Unknot detection from the Seifert-framed 2-cable of a knot
    cable    Print the Seifert-framed n-cable of a knot as a PD string
    table    Batch detection over a JSON-lines knot table

Exit codes: 0 success, 2 bad input or precondition, 3 resource limit,
4 internal invariant or theorem violation.
"""

import argparse
import asyncio
import logging
import sys
from typing import Optional, Sequence

from .. import __version__
from ..base.exceptions import ExitCode, KhovanovError, NotAKnotError
from ..base.kh_types import Algorithm, OutputFormat
from ..cable.cabling import seifert_framed_cable
from ..diagram.link_diagram import LinkDiagram, mirror
from ..diagram.pd_code import parse_pd, read_pd_source, to_pd
from ..invariants.detection import DetectionReport, compute_report, detect_cable_ranks
from .batch import run_batch, table_rows
from .report_format import format_text, report_to_json, summary_line
from .run_config import RunConfig

# Global module locker
logger = logging.getLogger(__name__)


def _read_diagram(args: argparse.Namespace, cfg: RunConfig) -> LinkDiagram:
    d = parse_pd(read_pd_source(args.pd))
    return mirror(d) if cfg.mirror else d


def _print_report(report: DetectionReport, cfg: RunConfig) -> None:
    if cfg.output_format is OutputFormat.JSON:
        print(report_to_json(report), flush=True)
    else:
        print(format_text(report), flush=True)


def cmd_compute(args: argparse.Namespace, cfg: RunConfig) -> ExitCode:
    """Betti report of the input diagram."""
    d = _read_diagram(args, cfg)
    report = compute_report(d, args.name, cfg.reduced, cfg.algorithm, cfg.caps)
    _print_report(report, cfg)
    return report.exit_code


def cmd_detect(args: argparse.Namespace, cfg: RunConfig) -> ExitCode:
    """Detection report of the input knot."""
    d = _read_diagram(args, cfg)
    report = detect_cable_ranks(d, cfg.cable_n, args.name, cfg.algorithm, cfg.caps)
    _print_report(report, cfg)
    return report.exit_code


def cmd_cable(args: argparse.Namespace, cfg: RunConfig) -> ExitCode:
    """PD string of the Seifert-framed cable."""
    d = _read_diagram(args, cfg)
    if not d.is_knot:
        raise NotAKnotError(f"Cabling needs a knot, the input has {d.component_count} components")
    cable = seifert_framed_cable(d, cfg.cable_n)
    print(to_pd(cable, include_basepoint=False), flush=True)
    return ExitCode.OK


def cmd_table(args: argparse.Namespace, cfg: RunConfig) -> ExitCode:
    """Batch detection with one report per row and a summary line."""
    rows = table_rows(cfg)
    result = asyncio.run(run_batch(rows, cfg, emit=lambda report: _print_report(report, cfg)))
    summary = summary_line(result.reports)
    if result.aborted:
        summary += ", aborted"
    # keeps stdout valid JSON lines
    print(summary, file=sys.stderr if cfg.output_format is OutputFormat.JSON else sys.stdout, flush=True)
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with the four subcommands and their shared options."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    common.add_argument("--algorithm", choices=[a.value for a in Algorithm], default=None,
                        help="homology engine (default: auto)")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=None,
                        help="output format (default: text)")
    common.add_argument("--cable", type=int, default=None, metavar="N",
                        help=f"number of cable strands (default: {RunConfig.DEFAULT_CABLE_N})")
    common.add_argument("--max-crossings", type=int, default=None, metavar="K",
                        help=f"dense engine crossing cap (default: {RunConfig.DEFAULT_MAX_CROSSINGS})")
    common.add_argument("--budget", type=int, default=None, metavar="M",
                        help=f"scan generator budget (default: {RunConfig.DEFAULT_GENERATOR_BUDGET})")
    common.add_argument("--budget-mb", type=int, default=None, metavar="MB",
                        help=f"memory budget in MiB (default: {RunConfig.DEFAULT_MEMORY_BUDGET_MB})")
    common.add_argument("--oracle-cap", type=int, default=None, metavar="K",
                        help=f"Kauffman bracket crossing cap (default: {RunConfig.DEFAULT_ORACLE_CAP})")
    common.add_argument("--mirror", action="store_true", help="work on the mirror diagram")

    single = argparse.ArgumentParser(add_help=False)
    single.add_argument("--pd", required=True, help="PD string, or @file to read it from a file")
    single.add_argument("--name", default="input", help="name shown in the report")

    parser = argparse.ArgumentParser(
        prog="kh-lib",
        description="Khovanov homology over Z/2 and unknot detection by 2-cables.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", parents=[common, single], help="Betti table of a diagram")
    compute.add_argument("--reduced", action="store_true", help="reduced homology")
    compute.set_defaults(handler=cmd_compute)

    detect = sub.add_parser("detect", parents=[common, single], help="unknot detection")
    detect.set_defaults(handler=cmd_detect)

    cable = sub.add_parser("cable", parents=[common, single], help="Seifert-framed cable as PD")
    cable.set_defaults(handler=cmd_cable)

    table = sub.add_parser("table", parents=[common], help="batch detection over a knot table")
    table.add_argument("--table", default=None, help="JSON-lines knot table (default: bundled)")
    table.add_argument("--include-expensive", action="store_true", help="run rows marked expensive")
    table.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")
    table.add_argument("--random", type=int, default=None, metavar="K",
                       help="append K seeded random knots to the batch")
    table.add_argument("--seed", type=int, default=None, help="seed of the random knots")
    table.set_defaults(handler=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line front end and return the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        cfg = RunConfig.from_namespace(args)
    except ValueError as e:
        parser.error(str(e))

    try:
        return int(args.handler(args, cfg))
    except KhovanovError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return int(ExitCode.for_exception(e))


if __name__ == "__main__":
    sys.exit(main())
