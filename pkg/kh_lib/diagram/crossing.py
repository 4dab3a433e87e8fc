from dataclasses import dataclass


# Slot positions of a PD crossing X[a,b,c,d]
UNDER_IN = 0
"""Slot of the incoming under-strand (``a``)."""

OVER_LEFT = 1
"""Second slot (``b``). The crossing is positive when the over-strand enters here."""

UNDER_OUT = 2
"""Slot of the outgoing under-strand (``c``)."""

OVER_RIGHT = 3
"""Fourth slot (``d``)."""

ZERO_SMOOTHING: tuple[tuple[int, int], tuple[int, int]] = ((UNDER_IN, OVER_RIGHT), (OVER_LEFT, UNDER_OUT))
"""Slot pairs joined by the 0-resolution (``a-d`` and ``b-c``)."""

ONE_SMOOTHING: tuple[tuple[int, int], tuple[int, int]] = ((UNDER_IN, OVER_LEFT), (UNDER_OUT, OVER_RIGHT))
"""Slot pairs joined by the 1-resolution (``a-b`` and ``c-d``)."""


@dataclass(frozen=True)
class Crossing:
    """
    One crossing of an oriented link diagram.

    The four edge identifiers are listed in PD order starting from the incoming
    under-strand. The sign is derived from the orientation of the over-strand:
    the crossing is positive when the over-strand runs from the second slot to
    the fourth slot and negative otherwise. Diagram construction computes the
    sign by orientation propagation; it is never taken from user input.

    Attributes:
        edges (tuple[int, int, int, int]): Edge identifiers ``(a, b, c, d)``.
        sign (int): +1 or -1.

    Example:
        >>> c = Crossing((1, 4, 2, 5), +1)
        >>> c.under
        (1, 2)
        >>> c.smoothing(0)
        ((1, 5), (4, 2))
    """
    edges: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if len(self.edges) != 4:
            raise ValueError(f"A crossing needs exactly 4 edge slots, got {len(self.edges)}")
        if self.sign not in (1, -1):
            raise ValueError(f"Crossing sign must be +1 or -1, got {self.sign}")

    @property
    def under(self) -> tuple[int, int]:
        """Incoming and outgoing edge of the under-strand."""
        return self.edges[UNDER_IN], self.edges[UNDER_OUT]

    @property
    def over(self) -> tuple[int, int]:
        """Incoming and outgoing edge of the over-strand."""
        if self.sign > 0:
            return self.edges[OVER_LEFT], self.edges[OVER_RIGHT]
        return self.edges[OVER_RIGHT], self.edges[OVER_LEFT]

    def smoothing(self, choice: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Edge pairs joined by the 0- or 1-resolution of this crossing.

        Args:
            choice: 0 or 1.

        Returns:
            Two edge pairs. The 0-resolution is the oriented resolution of a
            positive crossing, the 1-resolution that of a negative crossing.
        """
        slots = ZERO_SMOOTHING if choice == 0 else ONE_SMOOTHING
        return tuple((self.edges[i], self.edges[j]) for i, j in slots)

    def mirrored(self) -> "Crossing":
        """The same crossing with over- and under-strand exchanged.

        The slot list is rotated so that it starts at the new incoming
        under-strand, which keeps the planar cyclic order intact.
        """
        a, b, c, d = self.edges
        if self.sign > 0:
            return Crossing((b, c, d, a), -1)
        return Crossing((d, a, b, c), 1)

    def relabeled(self, mapping) -> "Crossing":
        """Crossing with every edge replaced through ``mapping``."""
        return Crossing(tuple(mapping[e] for e in self.edges), self.sign)

    def __str__(self):
        a, b, c, d = self.edges
        return f"X[{a},{b},{c},{d}]"
