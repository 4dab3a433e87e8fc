import numpy as np

WORD_BITS = 64


def pack_rows(matrix: np.ndarray) -> np.ndarray:
    """Pack a 0/1 matrix into rows of 64-bit words.

    Column ``c`` ends up in bit ``c % 64`` of word ``c // 64``.

    Args:
        matrix: 2-D array with entries in {0, 1} (higher bits are ignored).

    Returns:
        Array of shape ``(rows, ceil(cols / 64))`` and dtype uint64.
    """
    matrix = np.asarray(matrix)
    rows, cols = matrix.shape
    width = (cols + WORD_BITS - 1) // WORD_BITS * WORD_BITS
    padded = np.zeros((rows, width), dtype=np.uint8)
    padded[:, :cols] = matrix & 1
    return np.packbits(padded, axis=1, bitorder="little").view(np.uint64).copy()


def rank_gf2(matrix: np.ndarray) -> int:
    """Rank of a matrix over the two-element field.

    Rows are bit-packed and reduced column by column; each elimination step
    XORs the pivot row into all rows below it at once.

    Args:
        matrix: 2-D array with entries in {0, 1}.

    Returns:
        The rank.

    Example:
        >>> rank_gf2(np.ones((2, 2), dtype=np.uint8))
        1
        >>> rank_gf2(np.eye(5, dtype=np.uint8))
        5
    """
    matrix = np.asarray(matrix)
    if matrix.ndim != 2:
        raise ValueError(f"Expected a 2-D matrix, got shape {matrix.shape}")
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return 0

    packed = pack_rows(matrix)
    one = np.uint64(1)
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        word, bit = divmod(col, WORD_BITS)
        shift = np.uint64(bit)
        hits = np.flatnonzero((packed[rank:, word] >> shift) & one)
        if hits.size == 0:
            continue
        pivot = rank + hits[0]
        if pivot != rank:
            packed[[rank, pivot]] = packed[[pivot, rank]]
        below = rank + 1 + np.flatnonzero((packed[rank + 1:, word] >> shift) & one)
        if below.size:
            packed[below] ^= packed[rank]
        rank += 1
    return rank
