"""Matrix builders, a dense symmetric eigensolver, and closed-form spectra.

Four matrices are associated with a weighted graph: the adjacency matrix W,
the difference Laplacian D - W, the degree-normalized Laplacian
I - D^{-1/2} W D^{-1/2} (diagonal 1 - w_ii/d_i when loops are present), and
the signless Laplacian D + W. Paths and cycles additionally have closed-form
eigenvalues, and paths closed-form eigenvectors, which the numeric solver is
tested against.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, NumericError
from .graph import CYCLE, PATH, FamilySpec, Graph

RESIDUAL_TOL = 1e-9
ORTHO_TOL = 1e-9
SIMPLE_GAP_TOL = 1e-8


class MatrixKind(enum.Enum):
    ADJACENCY = "adjacency"
    DIFFERENCE = "difference"
    NORMALIZED = "normalized"
    SIGNLESS = "signless"

    @classmethod
    def parse(cls, text: str) -> "MatrixKind":
        try:
            return cls(text)
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise DomainError(f"unknown matrix kind {text!r}; expected one of {names}")


@dataclass(frozen=True)
class SymmetricMatrix:
    """Dense real symmetric matrix tied to its source graph."""

    kind: MatrixKind
    source: str
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise DomainError("matrix must be square")
        if not np.array_equal(v, v.T):
            raise DomainError("matrix must be exactly symmetric")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def order(self) -> int:
        return self.values.shape[0]


def build_matrix(g: Graph, kind: MatrixKind) -> SymmetricMatrix:
    """Assemble one of the four graph matrices."""
    n = g.n
    w = np.zeros((n, n))
    for u, v, wt in g.edges:
        w[u, v] = w[v, u] = wt
    for v, wt in g.loops:
        w[v, v] = wt
    deg = np.array(g.degrees, dtype=float)
    if kind is MatrixKind.ADJACENCY:
        m = w
    elif kind is MatrixKind.DIFFERENCE:
        m = np.diag(deg) - w
    elif kind is MatrixKind.SIGNLESS:
        m = np.diag(deg) + w
    elif kind is MatrixKind.NORMALIZED:
        if min(g.degrees) <= 0:
            bad = g.degrees.index(0)
            raise DomainError(
                f"vertex {bad + 1} has degree 0; normalized Laplacian undefined")
        scale = 1.0 / np.sqrt(deg)
        m = -w * np.outer(scale, scale)
        np.fill_diagonal(m, [1.0 - w[i, i] / deg[i] for i in range(n)])
    else:
        raise DomainError(f"unknown matrix kind {kind!r}")
    m = np.triu(m) + np.triu(m, 1).T  # mirror the upper triangle exactly
    return SymmetricMatrix(kind, g.name, m)


@dataclass(frozen=True)
class Spectrum:
    """Full eigendecomposition with ascending eigenvalues and residual bound."""

    kind: MatrixKind
    source: str
    eigenvalues: np.ndarray = field(repr=False)
    eigenvectors: np.ndarray = field(repr=False)
    residual: float

    @property
    def order(self) -> int:
        return self.eigenvalues.shape[0]

    @property
    def gaps(self) -> np.ndarray:
        return np.diff(self.eigenvalues)

    @property
    def lambda2(self) -> float:
        if self.order < 2:
            raise DomainError("lambda2 needs at least two eigenvalues")
        return float(self.eigenvalues[1])

    def lambda2_is_simple(self) -> bool:
        """Gap test: lambda3 - lambda2 must clear a relative threshold."""
        if self.order < 2:
            return False
        if self.order == 2:
            return True
        lam3 = float(self.eigenvalues[2])
        return lam3 - self.lambda2 > SIMPLE_GAP_TOL * max(1.0, abs(lam3))


def eig_sym(m: SymmetricMatrix) -> Spectrum:
    """Eigendecomposition of a symmetric matrix, validated against residuals."""
    try:
        vals, vecs = np.linalg.eigh(m.values)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigensolver failed to converge: {exc}") from exc
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    residual = float(np.max(np.linalg.norm(m.values @ vecs - vecs * vals, axis=0))) \
        if m.order else 0.0
    scale = max(1.0, float(np.max(np.abs(m.values)))) * max(1, m.order)
    if residual > RESIDUAL_TOL * scale:
        raise NumericError("eigendecomposition residual above tolerance",
                           residual=residual)
    ortho = float(np.max(np.abs(vecs.T @ vecs - np.eye(m.order))))
    if ortho > ORTHO_TOL:
        raise NumericError("eigenvectors are not orthonormal", residual=ortho)
    return Spectrum(m.kind, m.source, vals, vecs, residual)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedFormSpectrum:
    kind: MatrixKind
    source: str
    eigenvalues: np.ndarray = field(repr=False)
    eigenvectors: np.ndarray | None = field(repr=False, default=None)


def _path_closed_form(kind: MatrixKind, n: int):
    i = np.arange(n)[:, None]
    k = np.arange(n)[None, :]
    if kind is MatrixKind.ADJACENCY:
        vals = 2.0 * np.cos((np.arange(n) + 1) * np.pi / (n + 1))
        vecs = np.sin((i + 1) * (k + 1) * np.pi / (n + 1))
    elif kind is MatrixKind.DIFFERENCE:
        vals = 2.0 - 2.0 * np.cos(np.arange(n) * np.pi / n)
        vecs = np.cos((2 * i + 1) * k * np.pi / (2 * n))
    elif kind is MatrixKind.NORMALIZED:
        vals = 1.0 - np.cos(np.arange(n) * np.pi / (n - 1))
        vecs = np.cos(i * k * np.pi / (n - 1))
        if n > 2:
            vecs[1:-1, :] *= math.sqrt(2.0)  # interior entries carry sqrt(2)
    else:
        vals = 2.0 + 2.0 * np.cos((np.arange(n) + 1) * np.pi / n)
        vecs = np.sin((2 * i + 1) * (k + 1) * np.pi / (2 * n))
    return vals, vecs


def closed_form_spectrum(spec: FamilySpec, kind: MatrixKind) -> ClosedFormSpectrum:
    """Closed-form eigenvalues (paths and cycles) and path eigenvectors.

    Values are returned ascending; path eigenvector columns follow their
    eigenvalues and are normalized to unit length.
    """
    spec.validate()
    if spec.family == PATH:
        n = spec.n
        if n < 2:
            raise DomainError("closed-form path spectrum needs n >= 2")
        vals, vecs = _path_closed_form(kind, n)
        order = np.argsort(vals, kind="stable")
        vals = vals[order]
        vecs = vecs[:, order]
        vecs = vecs / np.linalg.norm(vecs, axis=0)
        return ClosedFormSpectrum(kind, spec.label(), vals, vecs)
    if spec.family == CYCLE:
        n = spec.n
        c = np.cos(2.0 * np.arange(n) * np.pi / n)
        vals = {MatrixKind.ADJACENCY: 2.0 * c,
                MatrixKind.DIFFERENCE: 2.0 - 2.0 * c,
                MatrixKind.NORMALIZED: 1.0 - c,
                MatrixKind.SIGNLESS: 2.0 + 2.0 * c}[kind]
        return ClosedFormSpectrum(kind, spec.label(), np.sort(vals))
    raise DomainError(f"no closed-form spectrum for family {spec.family!r}")


def circulant_eigenpairs(first_row) -> tuple[np.ndarray, np.ndarray]:
    """Eigenpairs of the circulant matrix with the given first row.

    With w the primitive n-th root of unity exp(-2*pi*i/n), eigenvalue k is
    sum_j c_j w^{kj} and eigenvector k has entries w^{ki}. Columns of the
    returned matrix hold the (unnormalized) eigenvectors.
    """
    row = np.asarray(first_row, dtype=complex)
    n = row.shape[0]
    if n < 1:
        raise DomainError("circulant needs at least one entry")
    omega = np.exp(-2j * np.pi / n)
    powers = np.arange(n)
    vecs = omega ** np.outer(powers, powers)  # column k: (w^k)^i
    vals = vecs.T @ row
    return vals, vecs


def circulant_matrix(first_row) -> np.ndarray:
    row = np.asarray(first_row, dtype=complex)
    n = row.shape[0]
    j = np.arange(n)
    return row[(j[None, :] - j[:, None]) % n]


def matrix_to_csv(m: SymmetricMatrix) -> str:
    """Plain CSV dump of the entries, for debugging sessions."""
    lines = [",".join(format(x, ".17g") for x in row) for row in m.values]
    return "\n".join(lines) + "\n"
