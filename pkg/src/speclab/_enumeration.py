"""Vectorized exhaustive bipartition sweep shared by the exact cut operations.

Bipartitions are canonicalized so that side A always contains vertex 0.
Enumeration index ``m`` encodes membership of vertices 1..n-1 in its bits,
so the full bitmask of A is ``1 | (m << 1)`` and the final index (all bits
set) is the improper full set, which callers must skip. All arrays are
int64; exact cross-multiplied comparisons stay within int64 because the
engine caps the graph volume at 2**15.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import SizeError
from .graph import EXHAUSTIVE_CAP, Graph

VOLUME_CAP = 1 << 15


def _check_size(g: Graph) -> None:
    if g.n < 2:
        raise SizeError("bipartition sweep needs at least two vertices")
    if g.n > EXHAUSTIVE_CAP:
        raise SizeError(f"exhaustive sweep capped at {EXHAUSTIVE_CAP} vertices, got {g.n}")
    if g.volume >= VOLUME_CAP:
        raise SizeError(f"exhaustive sweep caps the total volume at {VOLUME_CAP}")


def bipartition_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Cut weight and volume of side A for every canonical bipartition."""
    _check_size(g)
    deg = g.degrees
    vol = np.array([deg[0]], dtype=np.int64)
    for i in range(1, g.n):
        vol = np.concatenate([vol, vol + deg[i]])
    masks = np.arange(1 << (g.n - 1), dtype=np.int64)
    cut = np.zeros(masks.shape, dtype=np.int64)
    for u, v, w in g.edges:
        if u == 0:
            crossing = 1 - ((masks >> (v - 1)) & 1)
        else:
            crossing = ((masks >> (u - 1)) ^ (masks >> (v - 1))) & 1
        cut += crossing if w == 1 else w * crossing
    return cut, vol


def side_sizes(g: Graph) -> np.ndarray:
    """|A| for every canonical bipartition (vertex 0 included)."""
    _check_size(g)
    size = np.array([1], dtype=np.int64)
    for _ in range(1, g.n):
        size = np.concatenate([size, size + 1])
    return size


def boundary_volumes(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """vol(externally adjacent vertices) of side A and of side B, per mask.

    The boundary of a side S is the set of vertices outside S with at least
    one neighbor inside S.
    """
    _check_size(g)
    nmask = 1 << (g.n - 1)
    masks = np.arange(nmask, dtype=np.int64)
    rows = g.adjacency_rows()
    vol_da = np.zeros(nmask, dtype=np.int64)
    vol_db = np.zeros(nmask, dtype=np.int64)

    def member(v):
        if v == 0:
            return np.ones(nmask, dtype=bool)
        return ((masks >> (v - 1)) & 1).astype(bool)

    for v in range(g.n):
        nbrs = [u for u in rows[v] if u != v]
        if not nbrs:
            continue
        in_a = member(v)
        nbr_in_a = np.zeros(nmask, dtype=bool)
        nbr_in_b = np.zeros(nmask, dtype=bool)
        for u in nbrs:
            mu = member(u)
            nbr_in_a |= mu
            nbr_in_b |= ~mu
        vol_da[~in_a & nbr_in_a] += g.degrees[v]
        vol_db[in_a & nbr_in_b] += g.degrees[v]
    return vol_da, vol_db


def exact_min_fraction(num: np.ndarray, den: np.ndarray,
                       valid: np.ndarray) -> tuple[Fraction, int]:
    """Exact argmin of num/den over valid indices; ties break on lowest index.

    A float pass locates near-minimal candidates, then integer cross
    multiplication resolves them exactly (products fit int64 under the
    engine's volume cap).
    """
    if not np.any(valid):
        raise SizeError("no valid bipartition to minimize over")
    ratio = np.full(num.shape, np.inf)
    np.divide(num, den, out=ratio, where=valid & (den > 0))
    fmin = ratio.min()
    cand = np.flatnonzero(ratio <= fmin * (1 + 1e-9) + 1e-300)
    idx = int(cand[0])
    while True:
        better = cand[num[cand] * den[idx] < num[idx] * den[cand]]
        if better.size == 0:
            break
        idx = int(better[0])
    return Fraction(int(num[idx]), int(den[idx])), idx


def full_mask_from_index(index: int) -> int:
    """Recover the real vertex bitmask from an enumeration index."""
    return 1 | (index << 1)
