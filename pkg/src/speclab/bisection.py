"""Spectral bisection of the normalized Laplacian and its counterexamples.

The spectral cut takes the eigenvector of the second-smallest eigenvalue
(assumed simple), canonicalizes its sign so the first significantly nonzero
entry is positive, and splits the vertices on the sign pattern with
zero entries joining the positive side. On the two-row ladder families this
is compared against the exact minimum cut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cuts import min_ncut_brute, min_ncut_formula
from .errors import ConnectivityError, DomainError, MultiplicityError, NumericError
from .graph import (FamilySpec, Graph, VertexSubset, generate, is_automorphism,
                    is_connected, normalized_cut, vertex_subset)
from .matrices import MatrixKind, Spectrum, SymmetricMatrix, build_matrix, eig_sym

ZERO_TOL = 1e-9
PARITY_TOL = 1e-6

EVEN = "even"
ODD = "odd"
NEITHER = "neither"
NO_AUTOMORPHISM = "no_automorphism"


@dataclass(frozen=True)
class BisectionReport:
    """Sign-pattern cut of the second eigenvector, with exact cut value."""

    lambda2: float
    simple: bool
    gap: float
    fiedler: np.ndarray
    positive_side: VertexSubset
    value: Fraction
    parity: str
    alt_value: Fraction | None = None
    zero_count: int = 0


def _canonical_fiedler(spectrum: Spectrum) -> np.ndarray:
    u = spectrum.eigenvectors[:, 1].copy()
    significant = np.flatnonzero(np.abs(u) > ZERO_TOL)
    if significant.size == 0:
        raise NumericError("second eigenvector is numerically zero")
    if u[significant[0]] < 0:
        u = -u
    return u


def spectral_cut(g: Graph, automorphism=None) -> BisectionReport:
    """Bipartition of g by the sign pattern of the second eigenvector.

    ``automorphism`` feeds the parity classification; it defaults to the
    generator-supplied mirror when the graph carries one. When zero entries
    exist, the opposite-orientation cut value is also reported, since the
    sign convention silently decides which side absorbs them.
    """
    if not is_connected(g):
        raise ConnectivityError("spectral cut needs a connected graph")
    if g.n < 2:
        raise DomainError("spectral cut needs at least two vertices")
    spectrum = eig_sym(build_matrix(g, MatrixKind.NORMALIZED))
    if not spectrum.lambda2_is_simple():
        gap = float(spectrum.eigenvalues[2] - spectrum.eigenvalues[1])
        raise MultiplicityError(
            f"second eigenvalue is not simple (gap {gap:.3e}); spectral cut undefined")
    u = _canonical_fiedler(spectrum)
    zero = np.abs(u) <= ZERO_TOL
    pos = (u > ZERO_TOL) | zero
    side = vertex_subset(g, [int(i) for i in np.flatnonzero(pos)])
    value = normalized_cut(g, side)
    alt = None
    if int(zero.sum()):
        other = vertex_subset(g, [int(i) for i in np.flatnonzero(~pos | zero)])
        alt = normalized_cut(g, other)
    perm = automorphism if automorphism is not None else g.mirror
    parity = NO_AUTOMORPHISM if perm is None else classify_parity(g, perm, u)
    gap = float(spectrum.eigenvalues[2] - spectrum.eigenvalues[1]) \
        if spectrum.order > 2 else math.inf
    return BisectionReport(spectrum.lambda2, True, gap, u, side, value,
                           parity, alt, int(zero.sum()))


def classify_parity(g: Graph, perm, u) -> str:
    """Classify a vector as even/odd under an involutive automorphism."""
    perm = tuple(perm)
    if not is_automorphism(g, perm):
        raise DomainError("permutation is not an automorphism")
    if any(perm[perm[i]] != i for i in range(g.n)):
        raise DomainError("automorphism must have order 2")
    v = np.asarray(u, dtype=float)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise DomainError("cannot classify the zero vector")
    v = v / norm
    pv = v[list(perm)]
    if np.linalg.norm(v - pv) <= PARITY_TOL:
        return EVEN
    if np.linalg.norm(v + pv) <= PARITY_TOL:
        return ODD
    return NEITHER


def even_odd_blocks(n: int, k: int) -> tuple[SymmetricMatrix, SymmetricMatrix]:
    """Even and odd sector blocks of the two-row ladder's normalized Laplacian.

    The even block equals the normalized Laplacian of the weighted path; the
    odd block shifts the loop-tail diagonal from 1 - 1/d to 1 + 1/d. Their
    spectra together form the full ladder spectrum.
    """
    if n < 1 or k < 2:
        raise DomainError(f"sector blocks need n >= 1 and k >= 2, got ({n},{k})")
    wp = generate(FamilySpec.weighted_path(n, k))
    even = build_matrix(wp, MatrixKind.NORMALIZED)
    odd_values = np.array(even.values)
    for v, w in wp.loops:
        odd_values[v, v] = 1.0 + w / wp.degrees[v]
    label = FamilySpec.roach(n, k).label()
    even = SymmetricMatrix(even.kind, f"even_sector({label})", even.values)
    odd = SymmetricMatrix(MatrixKind.NORMALIZED, f"odd_sector({label})", odd_values)
    return even, odd


@dataclass(frozen=True)
class IndicatorIdentity:
    """Both sides of the indicator-vector identity y'Ly = vol(V) * Ncut."""

    lhs: float
    rhs: float
    ncut: Fraction
    volume: int
    quadratic_degree: float   # y'Dy, equals vol(V)
    dy_dot_one: float         # (Dy)'1, equals 0
    indicator: np.ndarray


def indicator_identity_check(g: Graph, a) -> IndicatorIdentity:
    """Evaluate the indicator identity for a bipartition side.

    The indicator carries sqrt(vol(B)/vol(A)) on side A and the negated
    reciprocal ratio on side B.
    """
    side = a if isinstance(a, VertexSubset) else vertex_subset(g, a)
    if side.mask == 0 or side.mask == (1 << g.n) - 1:
        raise DomainError("identity needs a nonempty proper subset")
    value = normalized_cut(g, side)
    vol_a = side.volume
    vol_b = g.volume - side.volume
    y = np.array([math.sqrt(vol_b / vol_a) if side.mask >> i & 1
                  else -math.sqrt(vol_a / vol_b) for i in range(g.n)])
    lap = build_matrix(g, MatrixKind.DIFFERENCE).values
    deg = np.array(g.degrees, dtype=float)
    return IndicatorIdentity(
        lhs=float(y @ lap @ y),
        rhs=g.volume * float(value),
        ncut=value,
        volume=g.volume,
        quadratic_degree=float(y @ (deg * y)),
        dy_dot_one=float(deg @ y),
        indicator=y,
    )


@dataclass(frozen=True)
class CounterexampleReport:
    """Exact comparison of minimum cut vs spectral cut on a ladder graph."""

    k: int
    mcut: Fraction
    mcut_method: str
    lcut: Fraction
    lambda2: float
    parity: str
    top_row_cut: bool
    strictly_less: bool


def counterexample_check(k: int) -> CounterexampleReport:
    """Verify the balanced ladder family splits spectrally along the rungs.

    For the family with antenna length 2k and k rungs, the second eigenvector
    must be odd, the spectral cut must be the one separating the two rows,
    and the exact minimum cut must be strictly smaller. The minimum cut is
    exhaustive for 6k <= 24 and closed-form above that.
    """
    if k < 3:
        raise DomainError("counterexample family needs k >= 3")
    spec = FamilySpec.roach(2 * k, k)
    g = generate(spec)
    report = spectral_cut(g)
    s = 3 * k
    top = vertex_subset(g, range(s))
    pos = set(report.positive_side.vertices())
    top_row_cut = (pos in (set(range(s)), set(range(s, 2 * s)))
                   and report.value == normalized_cut(g, top))
    if 6 * k <= 24:
        mcut = min_ncut_brute(g)
    else:
        mcut = min_ncut_formula(spec)
    return CounterexampleReport(
        k=k,
        mcut=mcut.value,
        mcut_method=mcut.method,
        lcut=report.value,
        lambda2=report.lambda2,
        parity=report.parity,
        top_row_cut=top_row_cut,
        strictly_less=mcut.value < report.value,
    )


@dataclass(frozen=True)
class RegionReport:
    member: bool
    checked: bool
    holds: bool | None
    mcut: Fraction | None = None
    lcut: Fraction | None = None


def in_disagreement_region(n: int, k: int) -> bool:
    """Membership in the parameter region where the two cuts must differ."""
    if n < 1 or k < 2:
        raise DomainError("region needs n >= 1 and k >= 2")
    if k == 2:
        return n >= 2
    if k == 3:
        return n >= 3
    if k % 2 == 0 and n % 3 == 0 and k >= 4:
        # K1 <= n  <=>  (3k+2n-2)^2 >= 2 (3k-1)^2, exactly
        return (3 * k + 2 * n - 2) ** 2 >= 2 * (3 * k - 1) ** 2
    return False


def disagreement_region_check(n: int, k: int) -> RegionReport:
    """Check region membership and, where feasible, the strict inequality."""
    member = in_disagreement_region(n, k)
    if not member or 2 * (n + k) > 64:
        return RegionReport(member, False, None)
    spec = FamilySpec.roach(n, k)
    mcut = min_ncut_formula(spec).value
    try:
        lcut = spectral_cut(generate(spec)).value
    except MultiplicityError:
        return RegionReport(member, False, None, mcut, None)
    return RegionReport(member, True, mcut < lcut, mcut, lcut)
