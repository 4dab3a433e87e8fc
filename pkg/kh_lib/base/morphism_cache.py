"""
Keyed cache for cobordism computations of the scanning engine.
"""

from typing import Any, Dict, Hashable, Optional


class MorphismCache:
    """Cache for circle decompositions and cobordism compositions.

    The scanning engine evaluates the same planar configurations over and over:
    the circles formed by two crossingless matchings, the gluing structure of
    three matchings, and compositions of basis cobordisms. MorphismCache stores
    these results by key so that each configuration is evaluated once per run.

    Caching Mechanism:
        - Keys are arbitrary hashable tuples built from matchings and patterns
        - Entries live as long as the cache or until the size bound is reached
        - When full, the oldest entry is evicted first
        - Hits and misses are counted for the debug log of a scan run

    Warning:
        A cache instance belongs to one computation. Sharing one instance
        between concurrent computations is not supported.

    Example:
        >>> cache = MorphismCache(max_entries=1000)
        >>> cache.set(("circles", a, b), result)
        >>> cache.get(("circles", a, b))  # result

    Attributes:
        _cache: Internal dictionary storing computed values
        _max_entries: Size bound of the cache
    """

    DEFAULT_MAX_ENTRIES = 500_000

    def __init__(self, max_entries: int = DEFAULT_MAX_ENTRIES):
        """Initialize the morphism cache.

        Args:
            max_entries: Maximum number of stored entries. The oldest entry is
                evicted when a new key would exceed this bound.
        """
        if max_entries <= 0:
            raise ValueError(f"max_entries must be positive, got {max_entries}")
        self._cache: Dict[Hashable, Any] = {}
        self._max_entries = max_entries
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable) -> Optional[Any]:
        """Retrieve a cached value.

        Returns:
            The cached value on a hit, None on a miss
        """
        value = self._cache.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def set(self, key: Hashable, value: Any) -> None:
        """Store a value in the cache.

        Args:
            key: The cache key
            value: The value to store. None is not stored since it marks a miss.
        """
        if value is None:
            return

        if key not in self._cache and len(self._cache) >= self._max_entries:
            oldest = next(iter(self._cache))
            del self._cache[oldest]

        self._cache[key] = value

    def __len__(self) -> int:
        """Returns the number of cached entries."""
        return len(self._cache)

    def __contains__(self, key: Hashable) -> bool:
        """Check whether a key is currently cached."""
        return key in self._cache

    def __repr__(self) -> str:
        return f"MorphismCache(entries={len(self._cache)}, hits={self.hits}, misses={self.misses})"
