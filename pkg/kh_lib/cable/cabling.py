"""
Parallel cables of knot diagrams.

The blackboard cable replaces every strand by ``n`` parallel copies, offset to
the left of the strand's direction, and every crossing by an ``n x n`` grid of
crossings of the same sign. Its framing is the blackboard framing; the Seifert
framing is reached by inserting ``-writhe`` full twists on one bundle of
parallel strands.
"""

import itertools
import logging

from ..base.exceptions import InsertionLocusError, NotAKnotError
from ..diagram.crossing import Crossing
from ..diagram.link_diagram import LinkDiagram, relabel
from .cable_types import CableSpec

logger = logging.getLogger(__name__)


def cable_spec(d: LinkDiagram, n: int) -> CableSpec:
    """Cable parameters realizing the Seifert framing of ``d``.

    Example:
        >>> cable_spec(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"), 2)
        CableSpec(n=2, twist_correction=-3)
    """
    return CableSpec(n=n, twist_correction=-d.writhe)


def full_twist_word(n: int, sign: int = 1, count: int = 1) -> list[int]:
    """Braid word of ``count`` full twists on ``n`` strands.

    One full twist is ``(s_1 s_2 ... s_{n-1})^n`` with ``n(n-1)`` crossings.
    """
    generator_row = [sign * i for i in range(1, n)]
    return generator_row * (n * count)


def _require_knot(d: LinkDiagram) -> None:
    if not d.is_knot:
        raise NotAKnotError(f"Cabling needs a knot diagram, got {d.component_count} components")


def blackboard_cable(d: LinkDiagram, n: int) -> LinkDiagram:
    """Blackboard-framed n-cable of a knot diagram.

    Copy ``k`` of a strand runs at offset ``k`` to its left. At a crossing the
    ``n`` under copies pass below the ``n`` over copies, giving ``n**2``
    crossings of the original sign. The cable carries a basepoint on copy 0 at
    the image of the input basepoint (or of the smallest edge) and records the
    ``n`` copies of that edge as its twist insertion bundle.

    Args:
        d: A knot diagram.
        n: Number of copies, at least 1.

    Returns:
        The cable with ``n**2 * crossings(d)`` crossings and ``n`` components.

    Raises:
        NotAKnotError: If ``d`` has more than one component.
        ValueError: If ``n`` is not positive.

    Example:
        >>> trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
        >>> c = blackboard_cable(trefoil, 2)
        >>> c.crossing_count, c.component_count
        (12, 2)
    """
    CableSpec(n=n)
    _require_knot(d)

    if d.crossing_count == 0:
        loops = tuple(range(1, n + 1))
        return LinkDiagram.from_signed((), n, basepoint=loops[0], bundle=loops)

    def ext(edge: int, copy: int) -> int:
        return (edge - 1) * n + copy + 1

    next_label = d.max_edge * n + 1

    def fresh() -> int:
        nonlocal next_label
        next_label += 1
        return next_label - 1

    crossings = []
    for crossing in d.crossings:
        a, b, c, e = crossing.edges
        vertical = [[ext(a, k)] + [fresh() for _ in range(n - 1)] + [ext(c, k)] for k in range(n)]
        horizontal = [[ext(b, l)] + [fresh() for _ in range(n - 1)] + [ext(e, l)] for l in range(n)]
        for k, l in itertools.product(range(n), repeat=2):
            row = n - 1 - l if crossing.sign > 0 else l
            crossings.append(Crossing(
                (vertical[k][row], horizontal[l][k], vertical[k][row + 1], horizontal[l][k + 1]),
                crossing.sign,
            ))

    marked = d.basepoint if d.basepoint is not None else d.edges[0]
    cable = LinkDiagram.from_signed(
        crossings,
        basepoint=ext(marked, 0),
        bundle=tuple(ext(marked, k) for k in range(n)),
    )
    logger.debug("Blackboard %s-cable: %s crossings", n, cable.crossing_count)
    return relabel(cable)


def full_twist_insertion(d: LinkDiagram, n: int, sign: int, count: int) -> LinkDiagram:
    """Insert ``count`` full twists of the given sign into the cable bundle.

    The twist braid is spliced into the ``n`` parallel strands recorded in
    ``d.bundle``: each bundle edge keeps its label up to the braid and the rest
    of the strand continues from the braid's output. Free loops in the bundle
    close up through the braid.

    Args:
        d: A diagram with an ``n``-strand insertion bundle.
        n: Number of parallel strands.
        sign: +1 or -1.
        count: Number of full twists, nonnegative.

    Returns:
        The diagram with ``count * n * (n - 1)`` additional crossings. For
        ``count == 0`` the input is returned unchanged.

    Raises:
        InsertionLocusError: If ``d`` has no bundle of ``n`` parallel strands.
        ValueError: On an invalid sign or a negative count.
    """
    if sign not in (1, -1):
        raise ValueError(f"Twist sign must be +1 or -1, got {sign}")
    if count < 0:
        raise ValueError(f"Twist count must be nonnegative, got {count}")
    if count == 0:
        return d
    if len(d.bundle) != n:
        raise InsertionLocusError(
            f"No insertion bundle of {n} parallel strands (diagram records {len(d.bundle)})"
        )

    next_label = d.max_label + 1
    current = list(d.bundle)
    twists = []
    for g in full_twist_word(n, sign, count):
        p = abs(g) - 1
        in_left, in_right = current[p], current[p + 1]
        out_left, out_right = next_label, next_label + 1
        next_label += 2
        if g > 0:
            twists.append([[in_right, in_left, out_left, out_right], 1])
        else:
            twists.append([[in_left, out_left, out_right, in_right], -1])
        current[p], current[p + 1] = out_left, out_right

    loop_ids = d.free_loop_ids
    edges = [list(c.edges) for c in d.crossings]
    closing: dict[int, int] = {}
    for start, final in zip(d.bundle, current):
        if start in loop_ids:
            closing[final] = start
        else:
            k, slot = d.edge_ends[start][1]
            edges[k][slot] = final

    crossings = [Crossing(tuple(e), c.sign) for e, c in zip(edges, d.crossings)]
    crossings += [Crossing(tuple(closing.get(e, e) for e in t), s) for t, s in twists]

    kept_loops = [loop for loop in loop_ids if loop not in d.bundle]
    new_max_edge = max(e for c in crossings for e in c.edges)
    loop_map = {loop: new_max_edge + 1 + i for i, loop in enumerate(kept_loops)}
    basepoint = d.basepoint
    if basepoint is not None:
        basepoint = loop_map.get(basepoint, basepoint)

    logger.debug("Inserted %s full twists of sign %+d on %s strands", count, sign, n)
    return LinkDiagram.from_signed(crossings, len(kept_loops), basepoint, d.bundle)


def seifert_framed_cable(d: LinkDiagram, n: int) -> LinkDiagram:
    """The n-cable of a knot with the Seifert (0-)framing.

    Builds the blackboard cable and corrects its framing by ``-writhe(d)``
    full twists, so that any two components have linking number 0.

    Args:
        d: A knot diagram.
        n: Number of copies, at least 1.

    Returns:
        Diagram with ``n**2 * c + n * (n - 1) * |writhe|`` crossings and ``n``
        components, relabeled consecutively.

    Raises:
        NotAKnotError: If ``d`` has more than one component.

    Example:
        >>> trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
        >>> seifert_framed_cable(trefoil, 2).crossing_count
        18
    """
    spec = cable_spec(d, n)
    cable = blackboard_cable(d, n)
    framed = full_twist_insertion(cable, n, spec.twist_sign, spec.twist_count)
    logger.info("Seifert-framed %s-cable: %s crossings (%s from framing)",
                n, framed.crossing_count, spec.added_crossings)
    return relabel(framed)
