"""Vectorized GF(2) enumeration helpers (numpy uint64 bitsets)."""

from __future__ import annotations

import numpy as np

_HAS_BITWISE_COUNT = hasattr(np, "bitwise_count")


def popcount_u64(a: np.ndarray) -> np.ndarray:
    if _HAS_BITWISE_COUNT:
        return np.bitwise_count(a)
    b = a.copy()
    count = np.zeros(a.shape, dtype=np.uint64)
    for _ in range(8):
        count += b & np.uint64(0x0101010101010101)
        b >>= np.uint64(1)
    # Fallback is only for numpy < 2; sum the per-byte counters.
    total = np.zeros(a.shape, dtype=np.uint64)
    for shift in range(0, 64, 8):
        total += (count >> np.uint64(shift)) & np.uint64(0xFF)
    return total


def xor_span(basis: list[int]) -> np.ndarray:
    """All 2^len(basis) XOR combinations as a uint64 array (needs <=64 bits)."""
    arr = np.zeros(1, dtype=np.uint64)
    for b in basis:
        arr = np.concatenate([arr, arr ^ np.uint64(b)])
    return arr


def bfs_distances(n_bits: int, masks: list[int], max_level: int | None = None) -> np.ndarray:
    """BFS word-metric distances from 0 over the full space F_2^n_bits.

    States are n_bits-wide ints indexed densely; masks are the generator
    steps.  Returns an int16 array of length 2^n_bits; unreached states (only
    possible when max_level cuts the search) hold -1.
    """
    size = 1 << n_bits
    dist = np.full(size, -1, dtype=np.int16)
    dist[0] = 0
    if not masks:
        return dist
    marr = np.array(sorted(set(masks)), dtype=np.int64)
    frontier = np.array([0], dtype=np.int64)
    level = 0
    while frontier.size:
        if max_level is not None and level >= max_level:
            break
        level += 1
        nxt = np.unique((frontier[:, None] ^ marr[None, :]).ravel())
        nxt = nxt[dist[nxt] == -1]
        dist[nxt] = level
        frontier = nxt
    return dist
