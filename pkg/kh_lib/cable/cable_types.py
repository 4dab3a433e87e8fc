from dataclasses import dataclass


@dataclass(frozen=True)
class CableSpec:
    """
    Parameters of an n-cable with a framing correction.

    Attributes:
        n (int): Number of parallel copies, at least 1.
        twist_correction (int): Signed number of full twists inserted into the
            blackboard cable. The Seifert framing uses ``-writhe``.

    Example:
        >>> spec = CableSpec(n=2, twist_correction=-3)
        >>> spec.twist_sign, spec.twist_count, spec.added_crossings
        (-1, 3, 6)
    """
    n: int
    twist_correction: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"A cable needs at least one copy, got n={self.n}")

    @property
    def twist_sign(self) -> int:
        """Sign of the inserted full twists (+1 when there are none)."""
        return -1 if self.twist_correction < 0 else 1

    @property
    def twist_count(self) -> int:
        """Number of inserted full twists."""
        return abs(self.twist_correction)

    @property
    def added_crossings(self) -> int:
        """Crossings added by the framing correction."""
        return self.n * (self.n - 1) * self.twist_count
