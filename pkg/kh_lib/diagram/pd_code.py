"""
Text form of link diagrams.

A PD string is a whitespace separated list of tokens:

- ``X[a,b,c,d]``: one crossing with positive integer edge labels, listed
  from the incoming under-strand.
- ``U<k>``: ``k`` crossingless unknot components. Several ``U`` tokens add up.
- ``*<e>``: optional basepoint on edge ``e``. Free loops are addressed by
  their implicit identifiers directly above the largest crossing edge.
"""

import logging
import re
from pathlib import Path

from ..base.exceptions import PDSyntaxError
from .link_diagram import LinkDiagram, build_diagram

logger = logging.getLogger(__name__)

_CROSSING_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")
_LOOPS_RE = re.compile(r"U(\d+)")
_BASEPOINT_RE = re.compile(r"\*(\d+)")
_TOKEN_RE = re.compile(r"X\[[^\]]*\]|\S+")


def parse_pd(text: str) -> LinkDiagram:
    """Parse a PD string into a validated diagram.

    Crossing signs and components are derived by orientation propagation, see
    :func:`build_diagram`.

    Args:
        text: The PD string.

    Returns:
        The parsed diagram.

    Raises:
        PDSyntaxError: On a malformed token, a repeated basepoint or an empty
            diagram.
        EdgeMultiplicityError: If an edge does not appear exactly twice.
        OrientationError: If an edge is used as outgoing (or incoming) twice.
        UnknownEdgeError: If the basepoint names an unknown edge.

    Example:
        >>> d = parse_pd("X[1,3,2,4] X[3,1,4,2]")
        >>> d.crossing_count, d.component_count
        (2, 2)
        >>> parse_pd("U1 *1").basepoint
        1
    """
    crossing_edges: list[tuple[int, ...]] = []
    free_loops = 0
    basepoint = None

    for token in _TOKEN_RE.findall(text):
        if match := _CROSSING_RE.fullmatch(token):
            crossing_edges.append(tuple(int(g) for g in match.groups()))
        elif match := _LOOPS_RE.fullmatch(token):
            free_loops += int(match.group(1))
        elif match := _BASEPOINT_RE.fullmatch(token):
            if basepoint is not None:
                raise PDSyntaxError(f"Basepoint given twice in {text!r}")
            basepoint = int(match.group(1))
        else:
            raise PDSyntaxError(f"Malformed PD token {token!r}")

    if not crossing_edges and free_loops == 0:
        raise PDSyntaxError("PD string describes an empty diagram")
    if any(e == 0 for edges in crossing_edges for e in edges):
        raise PDSyntaxError("Edge labels must be positive integers")

    return build_diagram(crossing_edges, free_loops, basepoint)


def to_pd(d: LinkDiagram, include_basepoint: bool = True) -> str:
    """Serialize a diagram to its PD string.

    Args:
        d: The diagram.
        include_basepoint: Append the ``*<e>`` token when the diagram has a
            basepoint.

    Returns:
        A string that :func:`parse_pd` reads back to an equal diagram, as long
        as no component consists of two edges that only pass over. PD codes
        leave the direction of such a component open.

    Example:
        >>> to_pd(parse_pd("U2"))
        'U2'
    """
    tokens = [str(c) for c in d.crossings]
    if d.num_free_loops:
        tokens.append(f"U{d.num_free_loops}")
    if include_basepoint and d.basepoint is not None:
        tokens.append(f"*{d.basepoint}")
    return " ".join(tokens)


def read_pd_source(source: str) -> str:
    """Resolve a PD source argument.

    A source starting with ``@`` names a file whose content is the PD string.
    Anything else is returned unchanged.

    Raises:
        PDSyntaxError: If the named file cannot be read.
    """
    if not source.startswith("@"):
        return source
    path = Path(source[1:])
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise PDSyntaxError(f"Cannot read PD file {path}: {e}") from e
    logger.debug("Read PD code from %s", path)
    return text.strip()
