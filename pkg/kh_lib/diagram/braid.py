"""
Braid closures and seeded random diagrams.

Braid words are sequences of nonzero integers: ``i`` stands for the generator
crossing strand positions ``i`` and ``i + 1`` positively, ``-i`` for its
inverse. Closures give a cheap supply of valid diagrams for property tests, and
the elementary braid moves give pairs of diagrams of the same link.
"""

import logging
from typing import Optional, Sequence

import numpy as np

from .crossing import Crossing
from .link_diagram import LinkDiagram, relabel

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240601
"""Seed used when no seed is given to the random generators."""


def braid_closure(word: Sequence[int], strands: int) -> LinkDiagram:
    """Diagram of the closure of a braid.

    Strands run upward. At each generator the two touched positions get fresh
    edge labels; at the end every final label is identified with the starting
    label of its position. Positions that no generator touches close up to
    free loops.

    Args:
        word: The braid word.
        strands: Number of strands, at least 1.

    Returns:
        The closure with consecutive edge labels along each component.

    Raises:
        ValueError: If a generator does not fit the number of strands.

    Example:
        >>> d = braid_closure([1, 1, 1], 2)
        >>> d.crossing_count, d.component_count, d.writhe
        (3, 1, 3)
    """
    if strands < 1:
        raise ValueError(f"A braid needs at least one strand, got {strands}")
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise ValueError(f"Generator {g} does not fit a braid on {strands} strands")

    current = list(range(1, strands + 1))
    next_label = strands + 1
    raw: list[tuple[tuple[int, int, int, int], int]] = []
    for g in word:
        p = abs(g) - 1
        in_left, in_right = current[p], current[p + 1]
        out_left, out_right = next_label, next_label + 1
        next_label += 2
        if g > 0:
            raw.append(((in_right, in_left, out_left, out_right), 1))
        else:
            raw.append(((in_left, out_left, out_right, in_right), -1))
        current[p], current[p + 1] = out_left, out_right

    closing = {final: start for start, final in zip(range(1, strands + 1), current)}
    crossings = [
        Crossing(tuple(closing.get(e, e) for e in edges), sign) for edges, sign in raw
    ]
    untouched = sum(1 for start, final in zip(range(1, strands + 1), current) if start == final)
    return relabel(LinkDiagram.from_signed(crossings, untouched))


def random_braid_word(rng: np.random.Generator, strands: int, length: int) -> list[int]:
    """Uniformly random braid word on ``strands`` strands."""
    if strands < 2:
        return []
    positions = rng.integers(1, strands, size=length)
    signs = rng.choice((-1, 1), size=length)
    return [int(p * s) for p, s in zip(positions, signs)]


def random_braid_diagram(
    seed: Optional[int] = None,
    max_strands: int = 4,
    max_crossings: int = 8,
    rng: Optional[np.random.Generator] = None,
) -> tuple[LinkDiagram, list[int], int]:
    """Closure of a seeded random braid.

    Args:
        seed: Seed for a fresh generator. Ignored when ``rng`` is given.
        max_strands: Largest number of strands.
        max_crossings: Largest word length.
        rng: Generator to draw from.

    Returns:
        Tuple of the diagram, the braid word and the number of strands.
    """
    if rng is None:
        rng = np.random.default_rng(DEFAULT_SEED if seed is None else seed)
    strands = int(rng.integers(1, max_strands + 1))
    length = int(rng.integers(0, max_crossings + 1))
    word = random_braid_word(rng, strands, length)
    return braid_closure(word, strands), word, strands


def random_knot_diagram(
    seed: Optional[int] = None,
    max_strands: int = 4,
    max_crossings: int = 8,
    rng: Optional[np.random.Generator] = None,
    attempts: int = 1000,
) -> LinkDiagram:
    """Closure of a seeded random braid with exactly one component.

    Raises:
        ValueError: If no knot was drawn within ``attempts`` tries.
    """
    if rng is None:
        rng = np.random.default_rng(DEFAULT_SEED if seed is None else seed)
    for _ in range(attempts):
        diagram, _, _ = random_braid_diagram(
            max_strands=max_strands, max_crossings=max_crossings, rng=rng
        )
        if diagram.is_knot:
            return diagram
    raise ValueError(f"No knot diagram drawn in {attempts} attempts")


def insert_cancelling_pair(word: Sequence[int], index: int, generator: int) -> list[int]:
    """Insert ``generator`` followed by its inverse (a second Reidemeister move)."""
    word = list(word)
    return word[:index] + [generator, -generator] + word[index:]


def apply_braid_relation(word: Sequence[int]) -> Optional[list[int]]:
    """Rewrite the first ``i, i+1, i`` (or ``i+1, i, i+1``) block of equal signs.

    The rewrite is a third Reidemeister move on the closure.

    Returns:
        The new word, or None when the word contains no such block.
    """
    word = list(word)
    for k in range(len(word) - 2):
        a, b, c = word[k:k + 3]
        if a != c or a * b <= 0:
            continue
        if abs(abs(a) - abs(b)) == 1:
            return word[:k] + [b, a, b] + word[k + 3:]
    return None


def stabilize(word: Sequence[int], strands: int, sign: int = 1) -> tuple[list[int], int]:
    """Markov stabilization: add a strand and one crossing with it.

    On the closure this is a first Reidemeister move.

    Returns:
        Tuple of the new word and the new number of strands.
    """
    if sign not in (1, -1):
        raise ValueError(f"Stabilization sign must be +1 or -1, got {sign}")
    return list(word) + [sign * strands], strands + 1
