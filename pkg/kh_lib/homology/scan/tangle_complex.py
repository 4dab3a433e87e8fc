"""
Complexes over the tangle category, built one crossing at a time.

A :class:`TangleComplex` holds delooped objects (crossingless matchings with a
homological and a quantum shift) and the arrows of its differential.
:meth:`TangleComplex.tensor_crossing` glues one more crossing onto the
tangle, removes the closed circles this creates by delooping, and
:meth:`TangleComplex.cancel_isomorphisms` shrinks the result by Gaussian
cancellation.
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from ...base.exceptions import GradingError
from ...base.kh_types import Label
from ...base.morphism_cache import MorphismCache
from ...diagram.crossing import ONE_SMOOTHING, ZERO_SMOOTHING
from .cobordism import (
    IDENTITY,
    Matching,
    Morphism,
    Surface,
    circle_lookup,
    compose,
    gamma_circles,
    make_matching,
    pattern_degree,
)

logger = logging.getLogger(__name__)

# (homological, quantum) shifts of the 0- and 1-resolution
CROSSING_SHIFTS = {
    1: ((0, 1), (1, 2)),
    -1: ((-1, -2), (0, -1)),
}

type Node = tuple[str, int]
type Segment = tuple[str, int]


class TangleObject(NamedTuple):
    matching: Matching
    i: int
    q: int


@dataclass(frozen=True)
class Gluing:
    """
    Result of gluing a matching of the tangle to a resolved crossing.

    Segments are ``("a", k)`` for the k-th arc of the tangle matching and
    ``("r", k)`` for the k-th arc of the resolved crossing.

    Attributes:
        matching (Matching): Arcs between the new boundary points.
        start_segment (dict[int, Segment]): Segment adjacent to each new
            boundary point.
        circles (tuple[Segment, ...]): One segment on every closed circle.
    """
    matching: Matching
    start_segment: dict[int, Segment]
    circles: tuple[Segment, ...]


class CrossingGlue:
    """Gluing data of one crossing against the current tangle boundary."""

    def __init__(self, edges: Sequence[int], boundary: frozenset[int]):
        self.edges = tuple(edges)
        self.links: dict[Node, Node] = {}
        self.new_boundary_nodes: dict[int, Node] = {}
        slots_of: dict[int, list[int]] = {}
        for k, e in enumerate(self.edges):
            slots_of.setdefault(e, []).append(k)

        self.shared: list[tuple[int, int]] = []
        self.doubled: list[tuple[int, int]] = []
        for e, slots in slots_of.items():
            if len(slots) == 2:
                k1, k2 = slots
                self.links[("x", k1)] = ("x", k2)
                self.links[("x", k2)] = ("x", k1)
                self.doubled.append((k1, k2))
            elif e in boundary:
                k = slots[0]
                self.links[("t", e)] = ("x", k)
                self.links[("x", k)] = ("t", e)
                self.shared.append((e, k))
            else:
                self.new_boundary_nodes[e] = ("x", slots[0])
        for p in boundary:
            if ("t", p) not in self.links:
                self.new_boundary_nodes[p] = ("t", p)
        self.boundary = frozenset(self.new_boundary_nodes)

    @staticmethod
    def smoothing_arcs(choice: int) -> tuple[tuple[int, int], tuple[int, int]]:
        return ZERO_SMOOTHING if choice == 0 else ONE_SMOOTHING

    def glue(self, a: Matching, choice: int) -> Gluing:
        """Glue matching ``a`` to the ``choice``-resolution of the crossing."""
        tangle_partner: dict[int, tuple[int, int]] = {}
        for k, (u, v) in enumerate(a):
            tangle_partner[u] = (v, k)
            tangle_partner[v] = (u, k)
        slot_partner: dict[int, tuple[int, int]] = {}
        for k, (s, t) in enumerate(self.smoothing_arcs(choice)):
            slot_partner[s] = (t, k)
            slot_partner[t] = (s, k)

        def step(node: Node) -> tuple[Segment, Node]:
            kind, x = node
            if kind == "t":
                other, k = tangle_partner[x]
                return ("a", k), ("t", other)
            other, k = slot_partner[x]
            return ("r", k), ("x", other)

        visited: set[Segment] = set()
        pairs = []
        start_segment: dict[int, Segment] = {}
        for point in sorted(self.new_boundary_nodes):
            node = self.new_boundary_nodes[point]
            segment, node = step(node)
            if segment in visited:
                continue
            start_segment[point] = segment
            visited.add(segment)
            while node in self.links:
                segment, node = step(self.links[node])
                visited.add(segment)
            end = node[1] if node[0] == "t" else self.edges[node[1]]
            start_segment[end] = segment
            pairs.append((point, end))

        circles = []
        all_segments = [("a", k) for k in range(len(a))] + [("r", 0), ("r", 1)]
        for first in all_segments:
            if first in visited:
                continue
            circles.append(first)
            kind, k = first
            node = ("t", a[k][0]) if kind == "a" else ("x", self.smoothing_arcs(choice)[k][0])
            segment = first
            while True:
                visited.add(segment)
                _, node = step(node)
                node = self.links[node]
                segment, _ = step(node)
                if segment == first:
                    break
        return Gluing(make_matching(pairs), start_segment, tuple(circles))


class TangleComplex:
    """
    A complex of delooped crossingless matchings.

    Arrows are stored both ways: ``arrows[s][t]`` is the morphism from object
    ``s`` to object ``t`` and ``incoming[t]`` the set of sources pointing at
    ``t``. Only nonzero morphisms are stored.

    Attributes:
        boundary (frozenset[int]): Boundary points of the tangle.
        objects (dict[int, TangleObject]): Objects by id.
        arrows (dict[int, dict[int, Morphism]]): Outgoing arrows per object.
        incoming (dict[int, set[int]]): Sources of incoming arrows per object.
    """

    def __init__(self, boundary: frozenset[int] = frozenset(), cache: Optional[MorphismCache] = None):
        self.boundary = boundary
        self.objects: dict[int, TangleObject] = {}
        self.arrows: dict[int, dict[int, Morphism]] = {}
        self.incoming: dict[int, set[int]] = {}
        self.cache = cache if cache is not None else MorphismCache()
        self._next_id = 0

    @classmethod
    def empty(cls, cache: Optional[MorphismCache] = None) -> "TangleComplex":
        """Complex of the empty tangle: one empty matching in degree (0, 0)."""
        complex_ = cls(frozenset(), cache)
        complex_.add_object((), 0, 0)
        return complex_

    def __len__(self) -> int:
        return len(self.objects)

    @property
    def arrow_count(self) -> int:
        return sum(len(targets) for targets in self.arrows.values())

    def add_object(self, matching: Matching, i: int, q: int) -> int:
        oid = self._next_id
        self._next_id += 1
        self.objects[oid] = TangleObject(matching, i, q)
        self.arrows[oid] = {}
        self.incoming[oid] = set()
        return oid

    def add_arrow(self, source: int, target: int, morphism: Morphism) -> None:
        """Add ``morphism`` to the arrow from ``source`` to ``target``."""
        if not morphism:
            return
        current = self.arrows[source].get(target)
        total = morphism if current is None else current ^ morphism
        if total:
            self.arrows[source][target] = total
            self.incoming[target].add(source)
        elif current is not None:
            del self.arrows[source][target]
            self.incoming[target].discard(source)

    def remove_object(self, oid: int) -> None:
        for target in self.arrows.pop(oid):
            self.incoming[target].discard(oid)
        for source in self.incoming.pop(oid):
            self.arrows[source].pop(oid, None)
        del self.objects[oid]

    def is_isomorphism(self, source: int, target: int) -> bool:
        """True if the arrow is an identity between equal objects."""
        s, t = self.objects[source], self.objects[target]
        return (s.matching == t.matching and s.q == t.q
                and self.arrows[source].get(target) == IDENTITY)

    def cancel_isomorphisms(self) -> int:
        """Gaussian cancellation of every isomorphism arrow.

        For a cancelled identity ``b1 -> b2`` every zig-zag
        ``x -> b2 <- b1 -> y`` adds ``(b1 -> y) o (x -> b2)`` to ``x -> y``.
        New isomorphisms created this way are cancelled as well.

        Returns:
            Number of cancelled pairs.
        """
        worklist = deque(
            (s, t) for s in sorted(self.arrows) for t in sorted(self.arrows[s])
        )
        cancelled = 0
        while worklist:
            b1, b2 = worklist.popleft()
            if b1 not in self.objects or b2 not in self.objects:
                continue
            if b2 not in self.arrows[b1] or not self.is_isomorphism(b1, b2):
                continue

            middle = self.objects[b1].matching
            sources = sorted(self.incoming[b2] - {b1})
            targets = sorted(set(self.arrows[b1]) - {b2})
            for x in sources:
                delta = self.arrows[x][b2]
                for y in targets:
                    gamma = self.arrows[b1][y]
                    product = compose(self.objects[x].matching, middle, self.objects[y].matching,
                                      delta, gamma, self.cache)
                    if product:
                        self.add_arrow(x, y, product)
                        worklist.append((x, y))
            self.remove_object(b1)
            self.remove_object(b2)
            cancelled += 1
        if cancelled:
            logger.debug("Cancelled %s isomorphisms, %s objects left", cancelled, len(self.objects))
        return cancelled

    def verify_gradings(self) -> None:
        """Check that every arrow raises ``i`` by 1 and has quantum degree 0.

        Raises:
            GradingError: On the first violating arrow.
        """
        for source, targets in self.arrows.items():
            s = self.objects[source]
            for target, morphism in targets.items():
                t = self.objects[target]
                if t.i != s.i + 1:
                    raise GradingError(f"Arrow {source}->{target} goes from i={s.i} to i={t.i}")
                for pattern in morphism:
                    degree = pattern_degree(s.matching, t.matching, pattern, self.cache) + t.q - s.q
                    if degree != 0:
                        raise GradingError(
                            f"Arrow {source}->{target} has quantum degree {degree}"
                        )

    def tensor_crossing(self, edges: Sequence[int], sign: int) -> "TangleComplex":
        """Glue one crossing onto the tangle and deloop the closed circles.

        Args:
            edges: The crossing's edge labels in PD order.
            sign: Crossing sign, selecting the grading shifts.

        Returns:
            The new complex, before cancellation.
        """
        glue = CrossingGlue(edges, self.boundary)
        result = TangleComplex(glue.boundary, self.cache)
        shifts = CROSSING_SHIFTS[sign]

        gluings: dict[tuple[Matching, int], Gluing] = {}

        def glued(matching: Matching, choice: int) -> Gluing:
            key = (matching, choice)
            if key not in gluings:
                gluings[key] = glue.glue(matching, choice)
            return gluings[key]

        labelings: dict[int, list[tuple[Label, ...]]] = {}

        def labels_for(count: int) -> list[tuple[Label, ...]]:
            if count not in labelings:
                labelings[count] = list(itertools.product((Label.ONE, Label.X), repeat=count))
            return labelings[count]

        new_ids: dict[tuple[int, int, tuple[Label, ...]], int] = {}
        for oid in sorted(self.objects):
            obj = self.objects[oid]
            for choice in (0, 1):
                g = glued(obj.matching, choice)
                di, dq = shifts[choice]
                for labels in labels_for(len(g.circles)):
                    degree = sum(label.degree for label in labels)
                    new_ids[(oid, choice, labels)] = result.add_object(
                        g.matching, obj.i + di, obj.q + dq + degree
                    )

        # d_T tensor identity on the resolved crossing
        for source in sorted(self.arrows):
            a = self.objects[source].matching
            for target, morphism in sorted(self.arrows[source].items()):
                b = self.objects[target].matching
                for choice in (0, 1):
                    g_src, g_tgt = glued(a, choice), glued(b, choice)
                    for lam in labels_for(len(g_src.circles)):
                        for mu in labels_for(len(g_tgt.circles)):
                            image: set[int] = set()
                            for pattern in morphism:
                                image ^= self._tangle_arrow(glue, a, b, pattern, choice, g_src, g_tgt, lam, mu)
                            result.add_arrow(new_ids[(source, choice, lam)], new_ids[(target, choice, mu)],
                                             frozenset(image))

        # identity on the tangle tensor the saddle of the crossing
        for oid in sorted(self.objects):
            a = self.objects[oid].matching
            g0, g1 = glued(a, 0), glued(a, 1)
            for lam in labels_for(len(g0.circles)):
                for mu in labels_for(len(g1.circles)):
                    result.add_arrow(new_ids[(oid, 0, lam)], new_ids[(oid, 1, mu)],
                                     self._saddle_arrow(glue, a, g0, g1, lam, mu))
        return result

    def _attach_caps(
        self,
        surface: Surface,
        lower: Gluing,
        upper: Gluing,
        lam: Sequence[Label],
        mu: Sequence[Label],
        lower_piece,
        upper_piece,
    ) -> Morphism:
        # cups realize the inclusion of each delooped circle, caps the projection
        for segment, label in zip(lower.circles, lam):
            cup = surface.add_disk(1 if label is Label.X else 0)
            surface.join(cup, lower_piece(segment), 0)
        for segment, label in zip(upper.circles, mu):
            cap = surface.add_disk(1 if label is Label.ONE else 0)
            surface.join(cap, upper_piece(segment), 0)
        owners = [lower_piece(lower.start_segment[circle[0]])
                  for circle in gamma_circles(lower.matching, upper.matching, self.cache)]
        return surface.evaluate(owners)

    def _tangle_arrow(
        self,
        glue: CrossingGlue,
        a: Matching,
        b: Matching,
        pattern: int,
        choice: int,
        lower: Gluing,
        upper: Gluing,
        lam: Sequence[Label],
        mu: Sequence[Label],
    ) -> Morphism:
        circles = gamma_circles(a, b, self.cache)
        circle_of = circle_lookup(circles)
        surface = Surface()
        for k in range(len(circles)):
            surface.add_disk(pattern >> k & 1)
        squares = (surface.add_disk(), surface.add_disk())
        slot_square = {}
        for k, (s, t) in enumerate(glue.smoothing_arcs(choice)):
            slot_square[s] = slot_square[t] = squares[k]

        for edge, slot in glue.shared:
            surface.join(circle_of[edge], slot_square[slot], 1)
        for k1, k2 in glue.doubled:
            surface.join(slot_square[k1], slot_square[k2], 1)

        def lower_piece(segment: Segment) -> int:
            kind, k = segment
            return circle_of[a[k][0]] if kind == "a" else squares[k]

        def upper_piece(segment: Segment) -> int:
            kind, k = segment
            return circle_of[b[k][0]] if kind == "a" else squares[k]

        return self._attach_caps(surface, lower, upper, lam, mu, lower_piece, upper_piece)

    def _saddle_arrow(
        self,
        glue: CrossingGlue,
        a: Matching,
        lower: Gluing,
        upper: Gluing,
        lam: Sequence[Label],
        mu: Sequence[Label],
    ) -> Morphism:
        surface = Surface()
        squares = [surface.add_disk() for _ in a]
        square_at = {}
        for k, (u, v) in enumerate(a):
            square_at[u] = square_at[v] = squares[k]
        saddle = surface.add_disk()
        for edge, _ in glue.shared:
            surface.join(square_at[edge], saddle, 1)
        for _ in glue.doubled:
            surface.join(saddle, saddle, 1)

        def piece(segment: Segment) -> int:
            kind, k = segment
            return squares[k] if kind == "a" else saddle

        return self._attach_caps(surface, lower, upper, lam, mu, piece, piece)
