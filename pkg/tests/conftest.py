"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's vectorized enumeration
engine: the slow reference implementations walk Python integers and
Fractions directly, and the determinant oracle is LU factorization with
partial pivoting (numpy's det), so closed forms and fast paths are checked
against genuinely independent routes.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from speclab import Graph


def lu_det(m: np.ndarray) -> float:
    """Dense determinant via LU with partial pivoting (test-only oracle)."""
    return float(np.linalg.det(np.asarray(m, dtype=float)))


def slow_min_ncut(g: Graph) -> tuple[Fraction, int, int]:
    """Reference exhaustive minimum: (value, full bitmask, cut weight).

    Pure-Python sweep over canonical bipartitions (vertex 0 on side A),
    smallest-bitmask tie break.
    """
    s = g.volume
    best = None
    for m in range(2 ** (g.n - 1) - 1):
        mask = 1 | (m << 1)
        vol_a = sum(g.degrees[i] for i in range(g.n) if mask >> i & 1)
        cut = sum(w for u, v, w in g.edges if (mask >> u & 1) != (mask >> v & 1))
        value = Fraction(cut * s, vol_a * (s - vol_a))
        if best is None or value < best[0]:
            best = (value, mask, cut)
    return best


def slow_cheeger_vertex(g: Graph) -> Fraction:
    """Reference vertex expansion over all nonempty proper subsets."""
    rows = g.adjacency_rows()
    s = g.volume
    best = None
    for mask in range(1, 2 ** g.n - 1):
        inside = [i for i in range(g.n) if mask >> i & 1]
        vol_s = sum(g.degrees[i] for i in inside)
        boundary = {v for u in inside for v in rows[u]
                    if v != u and not mask >> v & 1}
        value = Fraction(sum(g.degrees[v] for v in boundary), min(vol_s, s - vol_s))
        if best is None or value < best:
            best = value
    return best


@pytest.fixture
def ncut_example_graph() -> Graph:
    """The 7-vertex regression graph: triangle pair bridged to a triangle.

    Degrees (4,2,4,2,3,3,2), volume 20; the best split is {1,2,3,4} with
    cut 2 and value 5/12.
    """
    edges = [(0, 1), (1, 2), (2, 0), (2, 3), (0, 3),
             (0, 4), (2, 5), (5, 4), (6, 4), (6, 5)]
    return Graph(7, tuple(edges), name="ncut_example")


def assert_exact(report_value: Fraction, expected: Fraction) -> None:
    __tracebackhide__ = True
    assert report_value == expected, f"{report_value} != {expected}"
