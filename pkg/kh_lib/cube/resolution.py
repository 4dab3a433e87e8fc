import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Sequence

import numpy as np

from ..base.exceptions import ResolutionError
from ..base.kh_types import Label
from ..diagram.link_diagram import LinkDiagram

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResolutionState:
    """
    A complete resolution of a diagram.

    Attributes:
        choices (tuple[int, ...]): 0 or 1 per crossing.
        circles (tuple[frozenset[int], ...]): Edge sets of the resulting
            circles, sorted by their smallest edge. Free loops form circles of
            their own.

    Example:
        >>> hopf = parse_pd("X[1,3,2,4] X[3,1,4,2]")
        >>> len(resolve(hopf, (0, 0)).circles), len(resolve(hopf, (1, 0)).circles)
        (2, 1)
    """
    choices: tuple[int, ...]
    circles: tuple[frozenset[int], ...]

    @property
    def height(self) -> int:
        """Number of 1-resolutions."""
        return sum(self.choices)

    @cached_property
    def circle_index(self) -> dict[int, int]:
        """Map from edge to the index of the circle containing it."""
        return {e: i for i, circle in enumerate(self.circles) for e in circle}

    def circle_of(self, edge: int) -> int:
        """Index of the circle through ``edge``."""
        return self.circle_index[edge]


def resolve(d: LinkDiagram, choices: Sequence[int]) -> ResolutionState:
    """Resolve every crossing of ``d`` and trace the resulting circles.

    Args:
        d: The diagram.
        choices: 0- or 1-resolution per crossing, in crossing order.

    Returns:
        The resolution with its circle decomposition.

    Raises:
        ResolutionError: If the number of choices differs from the number of
            crossings or a choice is not 0 or 1.
    """
    choices = tuple(int(c) for c in choices)
    if len(choices) != d.crossing_count:
        raise ResolutionError(
            f"Resolution needs {d.crossing_count} choices, got {len(choices)}"
        )
    if any(c not in (0, 1) for c in choices):
        raise ResolutionError(f"Resolution choices must be 0 or 1, got {choices}")

    parent = {e: e for e in d.edge_set}

    def find(e: int) -> int:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for crossing, choice in zip(d.crossings, choices):
        for u, v in crossing.smoothing(choice):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)

    groups: dict[int, set[int]] = {}
    for e in d.edge_set:
        groups.setdefault(find(e), set()).add(e)
    circles = tuple(sorted((frozenset(g) for g in groups.values()), key=min))
    return ResolutionState(choices, circles)


class EdgeMapKind(str, Enum):
    """Kind of an edge map of the cube."""
    MERGE = "merge"
    SPLIT = "split"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EdgeMap:
    """
    The map of the Frobenius algebra along one edge of the cube.

    Circles that do not touch the changed crossing are carried over with their
    labels. The touched circles are merged with ``m`` or split with ``Delta``:

    - ``m(1, 1) = 1``, ``m(1, x) = m(x, 1) = x``, ``m(x, x) = 0``
    - ``Delta(1) = 1 x + x 1``, ``Delta(x) = x x``

    Attributes:
        kind (EdgeMapKind): Merge or split.
        source (ResolutionState): Resolution at the tail of the cube edge.
        target (ResolutionState): Resolution at the head of the cube edge.
        source_changed (tuple[int, ...]): Indices of the touched source circles.
        target_changed (tuple[int, ...]): Indices of the touched target circles.
        carried (tuple[tuple[int, int], ...]): ``(source, target)`` index pairs
            of the untouched circles.
    """
    kind: EdgeMapKind
    source: ResolutionState
    target: ResolutionState
    source_changed: tuple[int, ...]
    target_changed: tuple[int, ...]
    carried: tuple[tuple[int, int], ...]

    def __call__(self, labels: Sequence[Label]) -> list[tuple[Label, ...]]:
        """Images of a labeling of the source circles.

        Returns:
            Target labelings whose sum is the image (an empty list for 0).
        """
        base: list[Label] = [Label.ONE] * len(self.target.circles)
        for s, t in self.carried:
            base[t] = labels[s]

        if self.kind is EdgeMapKind.MERGE:
            a, b = (labels[i] for i in self.source_changed)
            if a is Label.X and b is Label.X:
                return []
            base[self.target_changed[0]] = Label.ONE if a is b is Label.ONE else Label.X
            return [tuple(base)]

        first, second = self.target_changed
        if labels[self.source_changed[0]] is Label.X:
            base[first] = base[second] = Label.X
            return [tuple(base)]
        images = []
        for pair in ((Label.ONE, Label.X), (Label.X, Label.ONE)):
            base[first], base[second] = pair
            images.append(tuple(base))
        return images

    def matrix(self) -> np.ndarray:
        """Matrix of the map on all labelings, rows indexed by target labelings.

        Labelings are ordered as ``itertools.product((ONE, X), ...)``.
        """
        sources = list(itertools.product((Label.ONE, Label.X), repeat=len(self.source.circles)))
        targets = list(itertools.product((Label.ONE, Label.X), repeat=len(self.target.circles)))
        target_index = {t: k for k, t in enumerate(targets)}
        m = np.zeros((len(targets), len(sources)), dtype=np.uint8)
        for col, labels in enumerate(sources):
            for image in self(labels):
                m[target_index[image], col] ^= 1
        return m


def edge_map(source: ResolutionState, target: ResolutionState) -> EdgeMap:
    """Edge map between two resolutions adjacent in the cube.

    Args:
        source: Resolution with a 0 at the changed crossing.
        target: Resolution with a 1 at the changed crossing.

    Returns:
        The merge or split map.

    Raises:
        ResolutionError: If the resolutions do not differ in exactly one
            crossing, changed from 0 to 1.
    """
    if len(source.choices) != len(target.choices):
        raise ResolutionError("Resolutions of different diagrams are not adjacent")
    changed = [k for k, (a, b) in enumerate(zip(source.choices, target.choices)) if a != b]
    if len(changed) != 1 or source.choices[changed[0]] != 0:
        raise ResolutionError(
            f"Resolutions {source.choices} and {target.choices} are not adjacent in the cube"
        )

    target_positions = {circle: k for k, circle in enumerate(target.circles)}
    source_positions = {circle: k for k, circle in enumerate(source.circles)}
    carried = tuple(
        (k, target_positions[circle]) for k, circle in enumerate(source.circles) if circle in target_positions
    )
    source_changed = tuple(k for k, circle in enumerate(source.circles) if circle not in target_positions)
    target_changed = tuple(k for k, circle in enumerate(target.circles) if circle not in source_positions)

    if len(source_changed) == 2 and len(target_changed) == 1:
        kind = EdgeMapKind.MERGE
    elif len(source_changed) == 1 and len(target_changed) == 2:
        kind = EdgeMapKind.SPLIT
    else:
        raise ResolutionError(
            f"Changing crossing {changed[0] + 1} neither merges nor splits circles"
        )
    return EdgeMap(kind, source, target, source_changed, target_changed, carried)
