import logging
from collections import Counter, deque
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Optional, Sequence

from ..base.exceptions import (
    EdgeMultiplicityError,
    OrientationError,
    PDSyntaxError,
    UnknownEdgeError,
)
from .crossing import OVER_LEFT, OVER_RIGHT, UNDER_IN, UNDER_OUT, Crossing

# Global module locker
logger = logging.getLogger(__name__)

type Occurrence = tuple[int, int]
"""An edge slot, given as ``(crossing index, slot index)``."""

_STRAND_PARTNER = {UNDER_IN: UNDER_OUT, UNDER_OUT: UNDER_IN, OVER_LEFT: OVER_RIGHT, OVER_RIGHT: OVER_LEFT}


@dataclass(frozen=True)
class LinkDiagram:
    """
    An oriented link diagram given by a PD code.

    Diagrams are immutable values. All transformations (mirror, disjoint union,
    basepoint changes, cabling) return new diagrams. Instances are created by
    :func:`parse_pd`, :func:`build_diagram` or :meth:`LinkDiagram.from_signed`,
    which validate the code and derive crossing signs and components.

    Crossingless unknot components cannot be written as crossings. They are
    counted in ``num_free_loops`` and receive implicit edge identifiers
    directly above the largest crossing edge, so that a basepoint may sit on a
    free loop.

    Attributes:
        crossings (tuple[Crossing, ...]): Crossings in PD order.
        num_free_loops (int): Number of crossingless unknot components.
        components (tuple[tuple[int, ...], ...]): Edges of every component in
            traversal order, starting at the smallest edge. Components are
            sorted by their smallest edge, free loops come last.
        basepoint (int | None): Marked edge for reduced homology.
        bundle (tuple[int, ...]): Parallel strands available for twist
            insertion, ordered by their offset. Set by the blackboard cable and
            ignored by equality and serialization.

    Example:
        >>> d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
        >>> d.crossing_count, d.component_count, d.writhe
        (3, 1, 3)
    """
    crossings: tuple[Crossing, ...]
    num_free_loops: int = 0
    components: tuple[tuple[int, ...], ...] = ()
    basepoint: Optional[int] = None
    bundle: tuple[int, ...] = field(default=(), compare=False)

    @classmethod
    def from_signed(
        cls,
        crossings: Iterable[Crossing],
        num_free_loops: int = 0,
        basepoint: Optional[int] = None,
        bundle: Sequence[int] = (),
    ) -> "LinkDiagram":
        """Create a diagram from crossings whose signs are already known.

        The signs fix the direction of every over-strand. The method checks
        that every edge appears exactly twice and that every edge is entered
        at one end and left at the other, then traces the components.

        Args:
            crossings: Signed crossings in PD order.
            num_free_loops: Number of crossingless unknot components.
            basepoint: Optional marked edge.
            bundle: Optional parallel strands for twist insertion.

        Returns:
            The validated diagram.

        Raises:
            EdgeMultiplicityError: If an edge does not appear exactly twice.
            OrientationError: If an edge is entered or left at both ends.
            UnknownEdgeError: If basepoint or bundle refer to unknown edges.
        """
        crossings = tuple(crossings)
        if num_free_loops < 0:
            raise ValueError(f"num_free_loops must be nonnegative, got {num_free_loops}")
        _check_multiplicity(c.edges for c in crossings)

        heads: dict[int, Occurrence] = {}
        tails: dict[int, Occurrence] = {}
        for k, crossing in enumerate(crossings):
            in_slots = (UNDER_IN, OVER_LEFT if crossing.sign > 0 else OVER_RIGHT)
            out_slots = (UNDER_OUT, OVER_RIGHT if crossing.sign > 0 else OVER_LEFT)
            for slot in in_slots:
                edge = crossing.edges[slot]
                if edge in heads:
                    raise OrientationError(f"Edge {edge} is used as incoming at both ends")
                heads[edge] = (k, slot)
            for slot in out_slots:
                edge = crossing.edges[slot]
                if edge in tails:
                    raise OrientationError(f"Edge {edge} is used as outgoing at both ends")
                tails[edge] = (k, slot)

        components = []
        visited: set[int] = set()
        for start in sorted(heads):
            if start in visited:
                continue
            component = []
            edge = start
            while edge not in visited:
                visited.add(edge)
                component.append(edge)
                k, slot = heads[edge]
                edge = crossings[k].edges[_STRAND_PARTNER[slot]]
            components.append(tuple(component))

        max_edge = max(heads, default=0)
        components.extend((max_edge + 1 + i,) for i in range(num_free_loops))

        diagram = cls(
            crossings=crossings,
            num_free_loops=num_free_loops,
            components=tuple(components),
            basepoint=basepoint,
            bundle=tuple(bundle),
        )
        if basepoint is not None and basepoint not in diagram.edge_set:
            raise UnknownEdgeError(f"Basepoint edge {basepoint} does not exist in the diagram")
        unknown = [e for e in diagram.bundle if e not in diagram.edge_set]
        if unknown:
            raise UnknownEdgeError(f"Bundle edges {unknown} do not exist in the diagram")
        return diagram

    @property
    def crossing_count(self) -> int:
        """Number of crossings."""
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        """Number of components, free loops included."""
        return len(self.components)

    @property
    def is_knot(self) -> bool:
        """True for one-component diagrams."""
        return self.component_count == 1

    @property
    def max_edge(self) -> int:
        """Largest edge identifier used by a crossing (0 without crossings)."""
        return max((e for c in self.crossings for e in c.edges), default=0)

    @property
    def free_loop_ids(self) -> tuple[int, ...]:
        """Implicit edge identifiers of the free loops."""
        return tuple(self.max_edge + 1 + i for i in range(self.num_free_loops))

    @property
    def max_label(self) -> int:
        """Largest edge identifier, free loops included."""
        return self.max_edge + self.num_free_loops

    @cached_property
    def edge_set(self) -> frozenset[int]:
        """All edge identifiers, free loops included."""
        return frozenset(e for component in self.components for e in component)

    @property
    def edges(self) -> tuple[int, ...]:
        """All edge identifiers in increasing order."""
        return tuple(sorted(self.edge_set))

    @property
    def n_plus(self) -> int:
        """Number of positive crossings."""
        return sum(1 for c in self.crossings if c.sign > 0)

    @property
    def n_minus(self) -> int:
        """Number of negative crossings."""
        return sum(1 for c in self.crossings if c.sign < 0)

    @property
    def writhe(self) -> int:
        """Sum of crossing signs."""
        return sum(c.sign for c in self.crossings)

    @cached_property
    def component_index(self) -> dict[int, int]:
        """Map from edge identifier to the index of its component."""
        return {e: i for i, component in enumerate(self.components) for e in component}

    @cached_property
    def edge_ends(self) -> dict[int, tuple[Occurrence, Occurrence]]:
        """Map from crossing edge to its ``(tail, head)`` occurrences.

        The tail is the slot where the edge leaves a crossing, the head the
        slot where it enters the next one.
        """
        tails: dict[int, Occurrence] = {}
        heads: dict[int, Occurrence] = {}
        for k, crossing in enumerate(self.crossings):
            a, b, c, d = crossing.edges
            heads[a] = (k, UNDER_IN)
            tails[c] = (k, UNDER_OUT)
            if crossing.sign > 0:
                heads[b], tails[d] = (k, OVER_LEFT), (k, OVER_RIGHT)
            else:
                heads[d], tails[b] = (k, OVER_RIGHT), (k, OVER_LEFT)
        return {e: (tails[e], heads[e]) for e in heads}

    def component_of(self, edge: int) -> int:
        """Index of the component containing ``edge``.

        Raises:
            UnknownEdgeError: If the edge does not exist.
        """
        try:
            return self.component_index[edge]
        except KeyError:
            raise UnknownEdgeError(f"Edge {edge} does not exist in the diagram") from None

    def __str__(self):
        from .pd_code import to_pd
        return to_pd(self)


def _check_multiplicity(crossing_edges: Iterable[Sequence[int]]) -> None:
    counts = Counter(e for edges in crossing_edges for e in edges)
    for edge, count in sorted(counts.items()):
        if count != 2:
            raise EdgeMultiplicityError(f"Edge {edge} appears {count} times, expected exactly 2")


def build_diagram(
    crossing_edges: Sequence[Sequence[int]],
    num_free_loops: int = 0,
    basepoint: Optional[int] = None,
    bundle: Sequence[int] = (),
) -> LinkDiagram:
    """Create a diagram from unsigned PD crossings by orientation propagation.

    Every crossing lists its incoming under-strand first, which orients the
    under-strand. Orientations spread along edges (an edge leaves one slot and
    enters the other) and through crossings (a strand entering at one slot
    leaves at the opposite slot). A component that never passes under is
    oriented by its edge numbering: its smallest edge ``m`` enters the crossing
    where the strand continues as ``m + 1``.

    Args:
        crossing_edges: 4-tuples of edge identifiers in PD order.
        num_free_loops: Number of crossingless unknot components.
        basepoint: Optional marked edge.
        bundle: Optional parallel strands for twist insertion.

    Returns:
        The validated diagram with signs and components.

    Raises:
        PDSyntaxError: If a crossing does not have four positive edge labels.
        EdgeMultiplicityError: If an edge does not appear exactly twice.
        OrientationError: If the propagated orientation is inconsistent.
        UnknownEdgeError: If basepoint or bundle refer to unknown edges.

    Example:
        >>> d = build_diagram([(1, 3, 2, 4), (3, 1, 4, 2)])
        >>> d.component_count, d.writhe
        (2, -2)
    """
    crossing_edges = [tuple(edges) for edges in crossing_edges]
    for edges in crossing_edges:
        if len(edges) != 4:
            raise PDSyntaxError(f"A crossing needs exactly 4 edge slots, got {len(edges)}")
        if any(not isinstance(e, int) or e <= 0 for e in edges):
            raise PDSyntaxError(f"Edge labels must be positive integers, got {edges}")
    _check_multiplicity(crossing_edges)

    occurrences: dict[int, list[Occurrence]] = {}
    for k, edges in enumerate(crossing_edges):
        for slot, edge in enumerate(edges):
            occurrences.setdefault(edge, []).append((k, slot))

    incoming: dict[Occurrence, bool] = {}
    queue: deque[Occurrence] = deque()

    def assign(occurrence: Occurrence, is_incoming: bool) -> None:
        known = incoming.get(occurrence)
        if known is None:
            incoming[occurrence] = is_incoming
            queue.append(occurrence)
        elif known != is_incoming:
            k, slot = occurrence
            edge = crossing_edges[k][slot]
            role = "incoming" if known else "outgoing"
            raise OrientationError(f"Edge {edge} is used as {role} at both ends (crossing {k + 1})")

    def propagate() -> None:
        while queue:
            k, slot = queue.popleft()
            is_incoming = incoming[(k, slot)]
            assign((k, _STRAND_PARTNER[slot]), not is_incoming)
            edge = crossing_edges[k][slot]
            first, second = occurrences[edge]
            other = second if first == (k, slot) else first
            assign(other, not is_incoming)

    for k in range(len(crossing_edges)):
        assign((k, UNDER_IN), True)
        assign((k, UNDER_OUT), False)
    propagate()

    # Components that only pass over are oriented by their numbering
    while len(incoming) < 4 * len(crossing_edges):
        undecided = sorted(
            crossing_edges[k][slot]
            for k in range(len(crossing_edges))
            for slot in range(4)
            if (k, slot) not in incoming
        )
        smallest = undecided[0]
        entry = occurrences[smallest][0]
        for k, slot in occurrences[smallest]:
            if crossing_edges[k][_STRAND_PARTNER[slot]] == smallest + 1:
                entry = (k, slot)
                break
        logger.debug("Orienting over-only component by numbering at edge %s", smallest)
        assign(entry, True)
        propagate()

    crossings = [
        Crossing(edges, 1 if incoming[(k, OVER_LEFT)] else -1)
        for k, edges in enumerate(crossing_edges)
    ]
    return LinkDiagram.from_signed(crossings, num_free_loops, basepoint, bundle)


def writhe(d: LinkDiagram) -> int:
    """Sum of the crossing signs of a diagram.

    Example:
        >>> writhe(parse_pd("U1"))
        0
    """
    return d.writhe


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Exchange over- and under-strand at every crossing.

    Orientation, components, free loops and basepoint are kept. Every crossing
    sign is negated, so ``writhe(mirror(d)) == -writhe(d)``.

    Args:
        d: The diagram to mirror.

    Returns:
        The mirror diagram.
    """
    return LinkDiagram.from_signed(
        (c.mirrored() for c in d.crossings), d.num_free_loops, d.basepoint, d.bundle
    )


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    """Place two diagrams side by side.

    The edges of ``d2`` are shifted past every identifier of ``d1``. Free
    loops of both diagrams are kept, ``d1``'s first. The basepoint of ``d1``
    is kept if present, otherwise that of ``d2``.

    Args:
        d1: First diagram.
        d2: Second diagram.

    Returns:
        Diagram whose component count and writhe are the sums of the inputs'.
    """
    offset = d1.max_label
    shifted = [c.relabeled({e: e + offset for e in c.edges}) for c in d2.crossings]
    crossings = list(d1.crossings) + shifted
    new_max_edge = max((e for c in crossings for e in c.edges), default=0)

    loop_map: dict[int, int] = {}
    for i, loop in enumerate(d1.free_loop_ids):
        loop_map[loop] = new_max_edge + 1 + i
    d2_loop_map: dict[int, int] = {}
    for i, loop in enumerate(d2.free_loop_ids):
        d2_loop_map[loop] = new_max_edge + 1 + d1.num_free_loops + i

    basepoint = None
    if d1.basepoint is not None:
        basepoint = loop_map.get(d1.basepoint, d1.basepoint)
    elif d2.basepoint is not None:
        basepoint = d2_loop_map.get(d2.basepoint, d2.basepoint + offset)

    return LinkDiagram.from_signed(crossings, d1.num_free_loops + d2.num_free_loops, basepoint)


def set_basepoint(d: LinkDiagram, edge: int) -> LinkDiagram:
    """Return the diagram with the basepoint moved to ``edge``.

    Raises:
        UnknownEdgeError: If the edge does not exist.

    Example:
        >>> set_basepoint(parse_pd("U1"), 1).basepoint
        1
    """
    if edge not in d.edge_set:
        raise UnknownEdgeError(f"Edge {edge} does not exist in the diagram")
    return replace(d, basepoint=edge)


def with_default_basepoint(d: LinkDiagram) -> LinkDiagram:
    """Return ``d`` unchanged if it has a basepoint, else mark its smallest edge."""
    if d.basepoint is not None:
        return d
    return set_basepoint(d, d.edges[0])


def relabel(d: LinkDiagram) -> LinkDiagram:
    """Renumber edges consecutively along each oriented component.

    Components keep their order; the edges of component ``k`` receive the next
    block of consecutive identifiers in traversal order. Basepoint and bundle
    are transported.

    Args:
        d: The diagram to renumber.

    Returns:
        An equivalent diagram with edges ``1..2c`` followed by free loops.
    """
    mapping: dict[int, int] = {}
    crossing_components = d.components[:len(d.components) - d.num_free_loops]
    for component in crossing_components:
        for edge in component:
            mapping[edge] = len(mapping) + 1
    for i, loop in enumerate(d.free_loop_ids):
        mapping[loop] = 2 * d.crossing_count + 1 + i

    basepoint = mapping[d.basepoint] if d.basepoint is not None else None
    return LinkDiagram.from_signed(
        (c.relabeled(mapping) for c in d.crossings),
        d.num_free_loops,
        basepoint,
        tuple(mapping[e] for e in d.bundle),
    )


def linking_number(d: LinkDiagram, first: int, second: int) -> int:
    """Linking number of two components.

    Computed as half the signed count of crossings between the components.

    Args:
        d: The diagram.
        first: Index of the first component.
        second: Index of the second component.

    Returns:
        The linking number.

    Raises:
        ValueError: If a component index is out of range or both are equal.
    """
    if not (0 <= first < d.component_count and 0 <= second < d.component_count):
        raise ValueError(f"Component indices {first}, {second} out of range")
    if first == second:
        raise ValueError("Linking number needs two different components")
    total = 0
    for crossing in d.crossings:
        under = d.component_index[crossing.edges[UNDER_IN]]
        over = d.component_index[crossing.edges[OVER_LEFT]]
        if {under, over} == {first, second}:
            total += crossing.sign
    return total // 2


def verify_signs(d: LinkDiagram) -> bool:
    """Check that the stored signs agree with orientation propagation.

    Rebuilds the diagram from the unsigned PD code and compares signs of all
    crossings that lie on components passing under at least once.
    """
    rebuilt = build_diagram([c.edges for c in d.crossings], d.num_free_loops, d.basepoint)
    return all(a.sign == b.sign for a, b in zip(rebuilt.crossings, d.crossings))
