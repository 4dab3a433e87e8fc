import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import sympy as sp

from ..base.exceptions import GradingError
from ..base.polynomials import from_terms
from ..cube.chain_complex import BigradedComplex
from .gf2 import rank_gf2

logger = logging.getLogger(__name__)

type Bidegree = tuple[int, int]


@dataclass(eq=False)
class BettiTable:
    """
    Ranks of Khovanov homology per bidegree.

    Zero entries are not stored. Two tables are equal when all their ranks
    agree.

    Attributes:
        ranks (dict[Bidegree, int]): Rank per ``(i, j)``.

    Example:
        >>> table = BettiTable({(0, 1): 1, (0, -1): 1})
        >>> table.total
        2
        >>> table.tensor_with_v().total
        4
    """
    ranks: dict[Bidegree, int] = field(default_factory=dict)

    def __post_init__(self):
        for bidegree, rank in self.ranks.items():
            if rank < 0:
                raise ValueError(f"Negative rank {rank} at bidegree {bidegree}")
        self.ranks = {tuple(b): int(r) for b, r in sorted(self.ranks.items()) if r}

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[int, int, int]]) -> "BettiTable":
        """Build a table from ``(i, j, rank)`` triples."""
        ranks: dict[Bidegree, int] = {}
        for i, j, rank in rows:
            ranks[(i, j)] = ranks.get((i, j), 0) + rank
        return cls(ranks)

    @property
    def total(self) -> int:
        """Sum of all ranks."""
        return sum(self.ranks.values())

    def rank(self, i: int, j: int) -> int:
        return self.ranks.get((i, j), 0)

    def rows(self) -> list[tuple[int, int, int]]:
        """``(i, j, rank)`` triples sorted by ``i``, then ``j``."""
        return [(i, j, r) for (i, j), r in sorted(self.ranks.items())]

    @property
    def homological_degrees(self) -> list[int]:
        return sorted({i for i, _ in self.ranks})

    @property
    def quantum_degrees(self) -> list[int]:
        return sorted({j for _, j in self.ranks})

    def euler(self) -> sp.Expr:
        """Graded Euler characteristic ``sum (-1)**i rank(i, j) q**j``."""
        return from_terms((j, (-1) ** (i % 2) * r) for (i, j), r in self.ranks.items())

    def poincare_polynomial(self) -> dict[Bidegree, int]:
        """Coefficients of the Poincare polynomial ``sum rank(i, j) t**i q**j``."""
        return dict(sorted(self.ranks.items()))

    def format_poincare(self) -> str:
        """The Poincare polynomial as text, e.g. ``q^-1 + q``."""
        if not self.ranks:
            return "0"
        terms = []
        for (i, j), r in sorted(self.ranks.items()):
            factors = []
            if i:
                factors.append("t" if i == 1 else f"t^{i}")
            if j:
                factors.append("q" if j == 1 else f"q^{j}")
            monomial = "".join(factors) or "1"
            terms.append(monomial if r == 1 else (f"{r}{monomial}" if factors else str(r)))
        return " + ".join(terms)

    def tensor_with_v(self) -> "BettiTable":
        """Table of the tensor product with the unknot's homology.

        Every rank at ``(i, j)`` is copied to ``(i, j + 1)`` and ``(i, j - 1)``.
        Over Z/2 this turns the reduced table into the unreduced one.
        """
        ranks: dict[Bidegree, int] = {}
        for (i, j), r in self.ranks.items():
            for shifted in ((i, j + 1), (i, j - 1)):
                ranks[shifted] = ranks.get(shifted, 0) + r
        return BettiTable(ranks)

    def mirror_table(self) -> "BettiTable":
        """Table of the mirror image: ``(i, j)`` moves to ``(-i, -j)``."""
        return BettiTable({(-i, -j): r for (i, j), r in self.ranks.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            other = BettiTable(dict(other))
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.ranks == other.ranks

    def __repr__(self) -> str:
        return f"BettiTable({dict(sorted(self.ranks.items()))})"


def betti(c: BigradedComplex) -> BettiTable:
    """Betti numbers of a complex over Z/2.

    ``b(i, j) = dim C(i, j) - rank d(i, j) - rank d(i - 1, j)``

    Args:
        c: A complex with square-zero boundary.

    Returns:
        The Betti table.

    Raises:
        GradingError: If a boundary matrix does not map ``(i, j)`` to
            ``(i + 1, j)``.

    Example:
        >>> betti(build_complex(parse_pd("U1"))).ranks
        {(0, -1): 1, (0, 1): 1}
    """
    boundary_ranks: dict[Bidegree, int] = {}
    for (i, j), matrix in c.boundaries.items():
        expected = (c.dimension(i + 1, j), c.dimension(i, j))
        if matrix.shape != expected:
            raise GradingError(
                f"Boundary at ({i}, {j}) has shape {matrix.shape}, expected {expected}"
            )
        boundary_ranks[(i, j)] = rank_gf2(matrix)

    ranks = {}
    for (i, j), group in c.groups.items():
        ranks[(i, j)] = len(group) - boundary_ranks.get((i, j), 0) - boundary_ranks.get((i - 1, j), 0)
        if ranks[(i, j)] < 0:
            raise GradingError(f"Negative Betti number at ({i}, {j}); the boundary does not square to zero")
    table = BettiTable(ranks)
    logger.debug("Betti table with total rank %s", table.total)
    return table


def poincare_polynomial(b: BettiTable) -> dict[Bidegree, int]:
    """Coefficients of ``sum rank(i, j) t**i q**j``, see :meth:`BettiTable.poincare_polynomial`."""
    return b.poincare_polynomial()


def tensor_with_v(b: BettiTable) -> BettiTable:
    """See :meth:`BettiTable.tensor_with_v`."""
    return b.tensor_with_v()


def mirror_table(b: BettiTable) -> BettiTable:
    """See :meth:`BettiTable.mirror_table`."""
    return b.mirror_table()
