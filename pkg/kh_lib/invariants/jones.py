"""
Jones polynomial oracles.

The Kauffman bracket is evaluated by its state sum, independently of the
Khovanov complex, and converted to the variable ``q`` in which the unknot has
value ``q + q^-1``. In this convention the graded Euler characteristic of
unreduced Khovanov homology equals the result exactly.
"""

import itertools
import logging
import math
from collections import Counter

import sympy as sp

from ..base.exceptions import CrossingCapExceeded
from ..base.polynomials import A, format_laurent, from_terms, laurent_terms, q
from ..diagram.link_diagram import LinkDiagram

# Global module locker
logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 20

UNKNOT_POLY = q + 1 / q
"""Unnormalized Jones polynomial of the unknot, ``q + q^-1``."""

LOOP_FACTOR = -A ** 2 - A ** -2


def _count_loops(d: LinkDiagram, choices: tuple[int, ...]) -> int:
    parent: dict[int, int] = {}

    def find(u: int) -> int:
        root = u
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[u] != root:
            parent[u], u = root, parent[u]
        return root

    for crossing, choice in zip(d.crossings, choices):
        for u, v in crossing.smoothing(choice):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[rv] = ru
    return sum(1 for u in parent if find(u) == u) + d.num_free_loops


def kauffman_bracket(d: LinkDiagram, oracle_cap: int = DEFAULT_ORACLE_CAP) -> sp.Expr:
    """Kauffman bracket in the variable ``A``, with ``<O> = -A^2 - A^-2``.

    The 0-resolution carries the weight ``A`` and the 1-resolution ``A^-1``.
    Every loop contributes a factor ``-A^2 - A^-2``, so the empty diagram has
    bracket 1 and the unknot ``-A^2 - A^-2``.

    Raises:
        CrossingCapExceeded: If ``d`` has more than ``oracle_cap`` crossings.
    """
    if d.crossing_count > oracle_cap:
        raise CrossingCapExceeded(
            f"Kauffman bracket oracle is capped at {oracle_cap} crossings, diagram has {d.crossing_count}"
        )
    # states grouped by (A exponent, loop count)
    weights: Counter[tuple[int, int]] = Counter()
    for choices in itertools.product((0, 1), repeat=d.crossing_count):
        ones = sum(choices)
        weights[(d.crossing_count - 2 * ones, _count_loops(d, choices))] += 1

    return sp.expand(sp.Add(*(
        count * A ** exponent * LOOP_FACTOR ** loops
        for (exponent, loops), count in weights.items()
    )))


def kauffman_jones(d: LinkDiagram, oracle_cap: int = DEFAULT_ORACLE_CAP) -> sp.Expr:
    """Unnormalized Jones polynomial from the Kauffman bracket.

    The bracket is multiplied by ``(-A^3)^-w`` for the writhe ``w`` and
    converted by ``A^2 -> -q^-1``. The result for the unknot is ``q + q^-1``.

    Args:
        d: The diagram.
        oracle_cap: Largest crossing count accepted.

    Returns:
        The polynomial in ``q``.

    Raises:
        CrossingCapExceeded: If ``d`` has more than ``oracle_cap`` crossings.
        ValueError: If the writhe-corrected bracket has an odd power of ``A``.

    Example:
        >>> format_laurent(kauffman_jones(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")))
        'q + q^3 + q^5 - q^9'
    """
    corrected = kauffman_bracket(d, oracle_cap) * (-A ** 3) ** (-d.writhe)
    terms = []
    for exponent, coefficient in laurent_terms(corrected, A).items():
        if exponent % 2:
            raise ValueError(f"Odd power A^{exponent} in a writhe-corrected bracket")
        m = exponent // 2
        terms.append((-m, coefficient * (-1) ** (m % 2)))
    jones = from_terms(terms)
    logger.debug("Kauffman state sum over %s states: %s", 2 ** d.crossing_count, format_laurent(jones))
    return jones


def graded_euler(b) -> sp.Expr:
    """Graded Euler characteristic ``sum (-1)**i b(i, j) q**j`` of a Betti table.

    Example:
        >>> graded_euler(BettiTable({(0, 1): 1, (0, -1): 1}))
        q + 1/q
    """
    return b.euler()


def normalized_jones(p: sp.Expr) -> sp.Expr:
    """Divide an unnormalized Jones polynomial by the unknot's ``q + q^-1``.

    Raises:
        ValueError: If ``p`` is not a Laurent polynomial divisible by
            ``q + q^-1``.
    """
    terms = laurent_terms(p)
    if not terms:
        return sp.Integer(0)
    # p / (q + 1/q) = p * q**(shift + 1) / (q**2 + 1) * q**-shift
    shift = max(0, -min(terms))
    quotient, remainder = sp.div(sp.expand(p * q ** (shift + 1)), q ** 2 + 1, q)
    if remainder != 0:
        raise ValueError(f"{format_laurent(p)} is not divisible by q + q^-1")
    return sp.expand(quotient * q ** -shift)


def determinant(p: sp.Expr) -> int:
    """Determinant of a link from its unnormalized Jones polynomial.

    The absolute value of the normalized polynomial at ``q = i``, computed
    exactly.

    Raises:
        ValueError: If ``p`` is not divisible by ``q + q^-1`` or the value at
            ``q = i`` has a non-integral modulus.

    Example:
        >>> determinant(q + q**3 + q**5 - q**9)
        3
    """
    value = sp.expand(normalized_jones(p).subs(q, sp.I))
    re, im = (int(part) for part in value.as_real_imag())
    square = re * re + im * im
    root = math.isqrt(square)
    if root * root != square:
        raise ValueError(f"Jones value {re} + {im}i at q = i has non-integral modulus")
    return root


def determinant_check(d: LinkDiagram, p: sp.Expr) -> bool:
    """True if the determinant extracted from ``p`` vanishes.

    Every Seifert-framed 2-cable has determinant 0, so a nonzero value
    points at a wrong cable or a wrong polynomial.

    Args:
        d: The diagram ``p`` belongs to, used for diagnostics.
        p: Unnormalized Jones polynomial of ``d``.

    Raises:
        ValueError: If no determinant can be extracted from ``p``.
    """
    det = determinant(p)
    if det:
        logger.warning("Determinant %s of a %s-component, %s-crossing diagram is not 0",
                       det, d.component_count, d.crossing_count)
    return det == 0
