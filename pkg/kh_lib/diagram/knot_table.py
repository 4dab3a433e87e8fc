import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ..base.exceptions import KnotTableError
from .link_diagram import LinkDiagram
from .pd_code import parse_pd

logger = logging.getLogger(__name__)

BUNDLED_TABLE = Path(__file__).parent / "data" / "knot_table.jsonl"
"""Knot table shipped with the package."""


@dataclass(frozen=True)
class KnotTableRow:
    """
    One entry of a knot table file.

    Knot tables are JSON-lines files; every non-empty line is an object with
    the fields below. ``components`` defaults to 1 and ``expensive`` to false.
    Detection runs need knots, so rows declared with more than one component
    fail with NotAKnotError when they are run.

    Attributes:
        name (str): Display name of the entry.
        pd (str): PD string of the diagram.
        components (int): Declared number of components.
        expensive (bool): Entry is skipped unless expensive rows are requested.
        line (int): 1-based line number in the source file.
    """
    name: str
    pd: str
    components: int = 1
    expensive: bool = False
    line: int = 0

    def diagram(self) -> LinkDiagram:
        """Parse the row's PD string.

        Raises:
            DiagramError: If the PD string is invalid.
        """
        return parse_pd(self.pd)


def load_knot_table(path: Optional[Path | str] = None, include_expensive: bool = False) -> list[KnotTableRow]:
    """Read a JSON-lines knot table.

    Args:
        path: Table file. The bundled table is used when omitted.
        include_expensive: Keep rows marked ``expensive``.

    Returns:
        Rows in file order.

    Raises:
        KnotTableError: If the file cannot be read or a line is malformed.

    Example:
        >>> [row.name for row in load_knot_table()][:3]
        ['unknot_0', 'unknot_1', 'unknot_2']
    """
    path = BUNDLED_TABLE if path is None else Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise KnotTableError(f"Cannot read knot table {path}: {e}") from e

    rows = []
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            entry = json.loads(line)
        except json.JSONDecodeError as e:
            raise KnotTableError(f"{path}:{number}: invalid JSON ({e.msg})") from e
        if not isinstance(entry, dict) or not isinstance(entry.get("name"), str) \
                or not isinstance(entry.get("pd"), str):
            raise KnotTableError(f"{path}:{number}: expected an object with string fields 'name' and 'pd'")
        components = entry.get("components", 1)
        if not isinstance(components, int) or components < 1:
            raise KnotTableError(f"{path}:{number}: 'components' must be a positive integer")
        row = KnotTableRow(
            name=entry["name"],
            pd=entry["pd"],
            components=components,
            expensive=bool(entry.get("expensive", False)),
            line=number,
        )
        if row.expensive and not include_expensive:
            logger.debug("Skipping expensive table row %s", row.name)
            continue
        rows.append(row)

    logger.info("Loaded %s rows from %s", len(rows), path)
    return rows
