"""
Khovanov chain complex over Z/2 from the full cube of resolutions.

Gradings of a generator ``(state, labeling)`` of a diagram with ``n+``
positive and ``n-`` negative crossings:

- homological ``i = |state| - n-``
- quantum ``j = (#1 - #x) + i + n+ - n-``

The reduced complex is the subcomplex of generators whose basepoint circle is
labeled ``x``, shifted by ``+1`` in ``j`` so that the unknot sits in
bidegree ``(0, 0)``.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field

import numpy as np
import sympy as sp

from ..base.exceptions import (
    BoundarySquareError,
    CrossingCapExceeded,
    GeneratorBudgetExceeded,
    MemoryBudgetExceeded,
    MissingBasepointError,
)
from ..base.kh_types import Label
from ..base.polynomials import from_terms
from ..diagram.link_diagram import LinkDiagram
from .resolution import ResolutionState, edge_map, resolve

logger = logging.getLogger(__name__)

DENSE_CROSSING_CAP = 20
"""Largest diagram for which the full cube is built."""

MIB = 1 << 20

type Bidegree = tuple[int, int]


@dataclass(frozen=True)
class Generator:
    """
    A basis element of the chain complex.

    Attributes:
        state (tuple[int, ...]): Resolution choices.
        labels (tuple[Label, ...]): One label per circle of the resolution.
    """
    state: tuple[int, ...]
    labels: tuple[Label, ...]

    @property
    def degree(self) -> int:
        """``#1 - #x`` over the circles."""
        return sum(label.degree for label in self.labels)


@dataclass
class BigradedComplex:
    """
    A bigraded chain complex over Z/2.

    Attributes:
        groups (dict[Bidegree, list[Generator]]): Ordered basis per bidegree.
        boundaries (dict[Bidegree, np.ndarray]): Matrix from ``(i, j)`` to
            ``(i + 1, j)`` with rows indexed by the target basis. Missing
            entries are zero maps.
        reduced (bool): Whether this is the reduced complex.
        states (dict[tuple[int, ...], ResolutionState]): Resolutions by choice.
    """
    groups: dict[Bidegree, list[Generator]]
    boundaries: dict[Bidegree, np.ndarray]
    reduced: bool = False
    states: dict[tuple[int, ...], ResolutionState] = field(default_factory=dict, repr=False)

    @property
    def bidegrees(self) -> list[Bidegree]:
        """Bidegrees with nonzero groups, sorted."""
        return sorted(self.groups)

    @property
    def total_dimension(self) -> int:
        return sum(len(g) for g in self.groups.values())

    def dimension(self, i: int, j: int) -> int:
        return len(self.groups.get((i, j), ()))

    def boundary(self, i: int, j: int) -> np.ndarray:
        """Boundary matrix from ``(i, j)`` to ``(i + 1, j)``, zero if absent."""
        matrix = self.boundaries.get((i, j))
        if matrix is None:
            return np.zeros((self.dimension(i + 1, j), self.dimension(i, j)), dtype=np.uint8)
        return matrix


def group_sizes(d: LinkDiagram, states: dict[tuple[int, ...], ResolutionState], reduced: bool = False) -> dict[Bidegree, int]:
    """Dimension of every chain group, counted without listing generators.

    A resolution with ``m`` free circles contributes ``comb(m, k)``
    generators with ``k`` labels ``x``. In the reduced complex the basepoint
    circle is fixed to ``x`` and is not free.
    """
    sizes: dict[Bidegree, int] = {}
    for choices, resolution in states.items():
        i = sum(choices) - d.n_minus
        free = len(resolution.circles) - (1 if reduced else 0)
        for k in range(free + 1):
            # the fixed x and the +1 reduced shift cancel
            j = free - 2 * k + i + d.n_plus - d.n_minus
            sizes[(i, j)] = sizes.get((i, j), 0) + math.comb(free, k)
    return sizes


def boundary_bytes(sizes: dict[Bidegree, int]) -> int:
    """Bytes of all dense boundary matrices of a complex with these group sizes."""
    return sum(n * sizes.get((i + 1, j), 0) for (i, j), n in sizes.items())


def build_complex(
    d: LinkDiagram,
    reduced: bool = False,
    crossing_cap: int = DENSE_CROSSING_CAP,
    generator_budget: int | None = None,
    memory_budget_mb: int | None = None,
) -> BigradedComplex:
    """Build the Khovanov complex of ``d`` from all ``2**c`` resolutions.

    Generators are ordered lexicographically by state, then by labeling with
    ``1`` before ``x``. Both budgets are checked on the group sizes before
    any generator or matrix is allocated.

    Args:
        d: The diagram.
        reduced: Build the reduced complex. Needs a basepoint.
        crossing_cap: Largest crossing count accepted.
        generator_budget: Optional limit on the number of generators.
        memory_budget_mb: Optional limit in MiB on the boundary matrices,
            which hold one byte per entry.

    Returns:
        The complex.

    Raises:
        MissingBasepointError: If ``reduced`` is set and ``d`` has no basepoint.
        CrossingCapExceeded: If ``d`` has more than ``crossing_cap`` crossings.
        GeneratorBudgetExceeded: If the complex has more generators than
            ``generator_budget``.
        MemoryBudgetExceeded: If the boundary matrices need more than
            ``memory_budget_mb``.

    Example:
        >>> c = build_complex(parse_pd("U1"))
        >>> c.bidegrees
        [(0, -1), (0, 1)]
    """
    if reduced and d.basepoint is None:
        raise MissingBasepointError("Reduced homology needs a basepoint")
    if d.crossing_count > crossing_cap:
        raise CrossingCapExceeded(
            f"Diagram has {d.crossing_count} crossings, the full cube is capped at {crossing_cap}"
        )

    n_plus, n_minus = d.n_plus, d.n_minus
    states = {s: resolve(d, s) for s in itertools.product((0, 1), repeat=d.crossing_count)}

    sizes = group_sizes(d, states, reduced)
    size = sum(sizes.values())
    if generator_budget is not None and size > generator_budget:
        raise GeneratorBudgetExceeded(
            f"Full cube has {size} generators, budget is {generator_budget}"
        )
    matrix_bytes = boundary_bytes(sizes)
    if memory_budget_mb is not None and matrix_bytes > memory_budget_mb * MIB:
        raise MemoryBudgetExceeded(
            f"Dense boundary matrices need {matrix_bytes / MIB:.0f} MiB, budget is {memory_budget_mb} MiB"
        )
    logger.debug("Building %s complex: %s states, %s generators, %s matrix bytes",
                 "reduced" if reduced else "unreduced", len(states), size, matrix_bytes)

    groups: dict[Bidegree, list[Generator]] = {}
    index: dict[Generator, tuple[Bidegree, int]] = {}
    for choices, resolution in states.items():
        i = sum(choices) - n_minus
        marked = resolution.circle_of(d.basepoint) if reduced else None
        for labels in itertools.product((Label.ONE, Label.X), repeat=len(resolution.circles)):
            if marked is not None and labels[marked] is not Label.X:
                continue
            generator = Generator(choices, labels)
            j = generator.degree + i + n_plus - n_minus + (1 if reduced else 0)
            group = groups.setdefault((i, j), [])
            index[generator] = ((i, j), len(group))
            group.append(generator)

    boundaries: dict[Bidegree, np.ndarray] = {}
    for choices, resolution in states.items():
        i = sum(choices) - n_minus
        for k, choice in enumerate(choices):
            if choice:
                continue
            head = choices[:k] + (1,) + choices[k + 1:]
            phi = edge_map(resolution, states[head])
            marked = resolution.circle_of(d.basepoint) if reduced else None
            for labels in itertools.product((Label.ONE, Label.X), repeat=len(resolution.circles)):
                if marked is not None and labels[marked] is not Label.X:
                    continue
                (bidegree, col) = index[Generator(choices, labels)]
                for image in phi(labels):
                    target_bidegree, row = index[Generator(head, image)]
                    if target_bidegree != (i + 1, bidegree[1]):
                        raise BoundarySquareError(
                            f"Edge map from {choices} to {head} does not preserve the quantum grading"
                        )
                    matrix = boundaries.get(bidegree)
                    if matrix is None:
                        matrix = np.zeros((len(groups[target_bidegree]), len(groups[bidegree])), dtype=np.uint8)
                        boundaries[bidegree] = matrix
                    matrix[row, col] ^= 1

    return BigradedComplex(groups, boundaries, reduced, states)


def verify_square_zero(c: BigradedComplex) -> None:
    """Check that consecutive boundary maps compose to zero.

    Raises:
        BoundarySquareError: If some composite is nonzero.
    """
    for (i, j), first in c.boundaries.items():
        second = c.boundaries.get((i + 1, j))
        if second is None:
            continue
        product = (second.astype(np.int64) @ first.astype(np.int64)) & 1
        if product.any():
            raise BoundarySquareError(f"Boundary squared is nonzero at bidegree ({i}, {j})")


def chain_euler(c: BigradedComplex) -> sp.Expr:
    """Graded Euler characteristic ``sum (-1)**i dim C(i, j) q**j`` of the chains."""
    return from_terms(
        (j, (-1) ** (i % 2) * len(group)) for (i, j), group in c.groups.items()
    )
