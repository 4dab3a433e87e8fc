"""
Dotted cobordisms between crossingless matchings over Z/2.

Objects of the tangle category are crossingless matchings: sets of arcs
pairing up boundary points. A morphism from ``a`` to ``c`` is a sum of dotted
cobordisms. Modulo the local relations

- a sphere is 0, a sphere with one dot is 1,
- two dots on one component are 0,
- a handle is 0 (twice a dot),
- neck cutting,

every cobordism is a sum of basis cobordisms: one disk per circle of
``Gamma(a, c)`` (the union of both matchings, joined at the boundary points),
each disk with or without a dot. A basis cobordism is stored as a bitmask of
dotted circles; circles are ordered by their smallest point. A morphism is a
frozenset of bitmasks and addition is symmetric difference.
"""

from typing import Iterable, Optional, Sequence

from ...base.exceptions import InvariantViolation
from ...base.morphism_cache import MorphismCache

type Matching = tuple[tuple[int, int], ...]
type Morphism = frozenset[int]

IDENTITY: Morphism = frozenset({0})
"""The identity of a matching: all disks undotted."""

ZERO: Morphism = frozenset()


def make_matching(pairs: Iterable[tuple[int, int]]) -> Matching:
    """Normalize arcs to a sorted tuple of sorted pairs."""
    return tuple(sorted((min(u, v), max(u, v)) for u, v in pairs))


def partner_map(m: Matching) -> dict[int, int]:
    """Map from every boundary point to the other end of its arc."""
    partners = {}
    for u, v in m:
        partners[u] = v
        partners[v] = u
    return partners


def gamma_circles(a: Matching, c: Matching, cache: Optional[MorphismCache] = None) -> tuple[tuple[int, ...], ...]:
    """Circles of ``Gamma(a, c)`` as point tuples, sorted by smallest point.

    Each circle alternates arcs of ``a`` and arcs of ``c``.
    """
    key = ("circles", a, c)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    pa, pc = partner_map(a), partner_map(c)
    seen: set[int] = set()
    circles = []
    for start in sorted(pa):
        if start in seen:
            continue
        circle = []
        p = start
        while p not in seen:
            q = pa[p]
            seen.add(p)
            seen.add(q)
            circle.extend((p, q))
            p = pc[q]
        circles.append(tuple(circle))
    result = tuple(circles)
    if cache is not None:
        cache.set(key, result)
    return result


def circle_lookup(circles: Sequence[Sequence[int]]) -> dict[int, int]:
    """Map from point to the index of its circle."""
    return {p: k for k, circle in enumerate(circles) for p in circle}


def pattern_degree(a: Matching, c: Matching, pattern: int, cache: Optional[MorphismCache] = None) -> int:
    """Quantum degree of a basis cobordism from ``a`` to ``c``.

    Euler characteristic minus half the number of boundary points, minus 2
    per dot.
    """
    return len(gamma_circles(a, c, cache)) - len(a) - 2 * pattern.bit_count()


class Surface:
    """
    A cobordism assembled from disks.

    Disks are glued along intervals (Euler characteristic drops by 1) or
    along whole circles (no change). After assembly every circle of the
    target ``Gamma`` is attributed to the disk that carries one of its arcs,
    and :meth:`evaluate` reduces the surface to the disk basis.

    Example:
        >>> s = Surface()
        >>> lower, upper = s.add_disk(), s.add_disk()
        >>> s.join(lower, upper, 1)
        >>> s.evaluate([lower])
        frozenset({0})
    """

    __slots__ = ("_parent", "_dots", "_losses")

    def __init__(self):
        self._parent: list[int] = []
        self._dots: list[int] = []
        self._losses: list[tuple[int, int]] = []

    def add_disk(self, dots: int = 0) -> int:
        """Add a disk with ``dots`` dots and return its index."""
        self._parent.append(len(self._parent))
        self._dots.append(dots)
        return len(self._parent) - 1

    def _find(self, u: int) -> int:
        parent = self._parent
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    def join(self, u: int, v: int, chi_loss: int) -> None:
        """Glue two disks (or one disk to itself) along an interval or circle."""
        ru, rv = self._find(u), self._find(v)
        if ru != rv:
            self._parent[rv] = ru
        self._losses.append((u, chi_loss))

    def evaluate(self, owners: Sequence[int]) -> Morphism:
        """Reduce to the disk basis.

        Args:
            owners: For each circle of the target ``Gamma`` (in basis order),
                a disk on the component bounded by that circle.

        Returns:
            The set of dot patterns, empty for the zero morphism.
        """
        n = len(self._parent)
        roots = [self._find(u) for u in range(n)]
        chi: dict[int, int] = {}
        dots: dict[int, int] = {}
        for u, root in enumerate(roots):
            chi[root] = chi.get(root, 0) + 1
            dots[root] = dots.get(root, 0) + self._dots[u]
        for u, loss in self._losses:
            chi[roots[u]] -= loss
        owned: dict[int, int] = {root: 0 for root in chi}
        for k, u in enumerate(owners):
            owned[roots[u]] |= 1 << k

        patterns = {0}
        for root, mask in owned.items():
            boundary = mask.bit_count()
            twice_genus = 2 - boundary - chi[root]
            if twice_genus < 0 or twice_genus % 2:
                raise InvariantViolation(
                    f"Surface component with Euler characteristic {chi[root]} and {boundary} boundary circles"
                )
            d = dots[root]
            if twice_genus > 0 or d >= 2:
                return ZERO
            if boundary == 0:
                if d != 1:
                    return ZERO
                continue
            if d == 1:
                options = (mask,)
            else:
                options = tuple(mask ^ (1 << k) for k in range(len(owners)) if mask >> k & 1)
            patterns = {p | o for p in patterns for o in options}
        return frozenset(patterns)


def compose(
    a: Matching,
    b: Matching,
    c: Matching,
    first: Morphism,
    second: Morphism,
    cache: Optional[MorphismCache] = None,
) -> Morphism:
    """Composite ``second o first`` of morphisms ``a -> b`` and ``b -> c``.

    Args:
        a: Source matching.
        b: Middle matching.
        c: Target matching.
        first: Morphism from ``a`` to ``b``.
        second: Morphism from ``b`` to ``c``.
        cache: Optional cache for circles and basis composites.

    Returns:
        The composite from ``a`` to ``c``.
    """
    if not first or not second:
        return ZERO
    result: set[int] = set()
    for p1 in first:
        for p2 in second:
            result ^= compose_basis(a, b, c, p1, p2, cache)
    return frozenset(result)


def compose_basis(
    a: Matching,
    b: Matching,
    c: Matching,
    p1: int,
    p2: int,
    cache: Optional[MorphismCache] = None,
) -> Morphism:
    """Composite of two basis cobordisms given by dot patterns."""
    key = ("compose", a, b, c, p1, p2)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit

    lower = gamma_circles(a, b, cache)
    upper = gamma_circles(b, c, cache)
    lower_of = circle_lookup(lower)
    upper_of = circle_lookup(upper)

    surface = Surface()
    for k in range(len(lower)):
        surface.add_disk(p1 >> k & 1)
    for k in range(len(upper)):
        surface.add_disk(p2 >> k & 1)
    offset = len(lower)
    for u, _ in b:
        surface.join(lower_of[u], offset + upper_of[u], 1)
    owners = [lower_of[circle[0]] for circle in gamma_circles(a, c, cache)]
    result = surface.evaluate(owners)

    if cache is not None:
        cache.set(key, result)
    return result
