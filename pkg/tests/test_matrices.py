"""Matrix assembly, the eigensolver contract, and closed-form spectra."""

import math

import numpy as np
import pytest

import speclab as sl
from speclab import DomainError, FamilySpec, Graph, MatrixKind, SymmetricMatrix

KINDS = list(MatrixKind)
S2 = 1.0 / math.sqrt(2.0)


def spectrum_of(spec, kind):
    return sl.eig_sym(sl.build_matrix(sl.generate(spec), kind))


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------

def test_p4_matrix_table():
    g = sl.generate(FamilySpec.path(4))
    adj = sl.build_matrix(g, MatrixKind.ADJACENCY).values
    assert np.array_equal(adj, np.array([[0, 1, 0, 0], [1, 0, 1, 0],
                                         [0, 1, 0, 1], [0, 0, 1, 0]], dtype=float))
    lap = sl.build_matrix(g, MatrixKind.DIFFERENCE).values
    assert np.array_equal(lap, np.array([[1, -1, 0, 0], [-1, 2, -1, 0],
                                         [0, -1, 2, -1], [0, 0, -1, 1]], dtype=float))
    sless = sl.build_matrix(g, MatrixKind.SIGNLESS).values
    assert np.array_equal(sless[1], np.array([1.0, 2.0, 1.0, 0.0]))
    norm = sl.build_matrix(g, MatrixKind.NORMALIZED).values
    assert norm[0] == pytest.approx([1.0, -S2, 0.0, 0.0], abs=1e-15)
    assert norm[1] == pytest.approx([-S2, 1.0, -0.5, 0.0], abs=1e-15)


def test_weighted_path_normalized_diagonal():
    g = sl.generate(FamilySpec.weighted_path(4, 3))
    m = sl.build_matrix(g, MatrixKind.NORMALIZED).values
    assert np.diag(m) == pytest.approx([1, 1, 1, 1, 2 / 3, 2 / 3, 1 / 2], abs=1e-15)
    assert m[3, 4] == pytest.approx(-1.0 / math.sqrt(6.0), abs=1e-16)


def test_difference_rows_sum_to_zero_without_loops():
    for spec in (FamilySpec.cycle(5), FamilySpec.lollipop(4, 3)):
        m = sl.build_matrix(sl.generate(spec), MatrixKind.DIFFERENCE).values
        assert np.max(np.abs(m.sum(axis=1))) == 0.0


def test_matrices_exactly_symmetric():
    g = sl.generate(FamilySpec.roach(3, 3))
    for kind in KINDS:
        m = sl.build_matrix(g, kind).values
        assert np.array_equal(m, m.T)


def test_normalized_needs_positive_degrees():
    isolated = Graph(2, ())
    with pytest.raises(DomainError):
        sl.build_matrix(isolated, MatrixKind.NORMALIZED)
    sl.build_matrix(isolated, MatrixKind.DIFFERENCE)  # other kinds still fine


def test_symmetric_matrix_rejects_asymmetry():
    with pytest.raises(DomainError):
        SymmetricMatrix(MatrixKind.ADJACENCY, "bad", np.array([[0.0, 1.0], [0.0, 0.0]]))


# ---------------------------------------------------------------------------
# eigensolver
# ---------------------------------------------------------------------------

def test_eig_p2_difference():
    sp = spectrum_of(FamilySpec.path(2), MatrixKind.DIFFERENCE)
    assert sp.eigenvalues == pytest.approx([0.0, 2.0], abs=1e-12)


def test_eig_identity():
    sp = sl.eig_sym(SymmetricMatrix(MatrixKind.ADJACENCY, "I5", np.eye(5)))
    assert sp.eigenvalues == pytest.approx([1.0] * 5)


def test_roach22_eigenvalues_match_published_list():
    sp = spectrum_of(FamilySpec.roach(2, 2), MatrixKind.NORMALIZED)
    expected = [0.0, 0.204666, 0.371333, 1.0, 1.0, 1.62867, 1.79533, 2.0]
    assert np.max(np.abs(sp.eigenvalues - np.array(expected))) < 1e-5


def test_spectrum_invariants():
    for spec in (FamilySpec.roach(3, 4), FamilySpec.lollipop(5, 3)):
        for kind in KINDS:
            g = sl.generate(spec)
            m = sl.build_matrix(g, kind)
            sp = sl.eig_sym(m)
            assert np.all(np.diff(sp.eigenvalues) >= 0)
            q = sp.eigenvectors
            assert np.max(np.abs(q.T @ q - np.eye(m.order))) <= 1e-9
            assert sp.residual <= 1e-9 * max(1.0, np.max(np.abs(m.values))) * m.order


def test_eig_deterministic():
    m = sl.build_matrix(sl.generate(FamilySpec.roach(4, 3)), MatrixKind.NORMALIZED)
    a, b = sl.eig_sym(m), sl.eig_sym(m)
    assert np.array_equal(a.eigenvalues, b.eigenvalues)
    assert np.array_equal(a.eigenvectors, b.eigenvectors)


def test_lambda2_simplicity_gap():
    assert spectrum_of(FamilySpec.path(5), MatrixKind.NORMALIZED).lambda2_is_simple()
    # 1 - cos(2 pi k / 4) hits 1 twice on the 4-cycle
    assert not spectrum_of(FamilySpec.cycle(4), MatrixKind.NORMALIZED).lambda2_is_simple()


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def test_cycle4_adjacency_closed_form():
    cf = sl.closed_form_spectrum(FamilySpec.cycle(4), MatrixKind.ADJACENCY)
    assert cf.eigenvalues == pytest.approx([-2.0, 0.0, 0.0, 2.0], abs=1e-12)


def test_path4_normalized_closed_form():
    cf = sl.closed_form_spectrum(FamilySpec.path(4), MatrixKind.NORMALIZED)
    assert cf.eigenvalues == pytest.approx([0.0, 0.5, 1.5, 2.0], abs=1e-12)


def test_path2_signless_closed_form():
    cf = sl.closed_form_spectrum(FamilySpec.path(2), MatrixKind.SIGNLESS)
    assert cf.eigenvalues == pytest.approx([0.0, 2.0], abs=1e-12)


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.value)
def test_closed_forms_match_numeric(kind):
    for n in range(2, 22):
        cf = sl.closed_form_spectrum(FamilySpec.path(n), kind)
        sp = spectrum_of(FamilySpec.path(n), kind)
        assert np.max(np.abs(cf.eigenvalues - sp.eigenvalues)) <= 1e-9
    for n in range(3, 22):
        cf = sl.closed_form_spectrum(FamilySpec.cycle(n), kind)
        sp = spectrum_of(FamilySpec.cycle(n), kind)
        assert np.max(np.abs(cf.eigenvalues - sp.eigenvalues)) <= 1e-9


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.value)
def test_path_closed_form_eigenvectors(kind):
    for n in range(2, 16):
        m = sl.build_matrix(sl.generate(FamilySpec.path(n)), kind).values
        cf = sl.closed_form_spectrum(FamilySpec.path(n), kind)
        for j in range(n):
            u = cf.eigenvectors[:, j]
            assert np.linalg.norm(u) == pytest.approx(1.0, abs=1e-12)
            assert np.linalg.norm(m @ u - cf.eigenvalues[j] * u) <= 1e-10


def test_closed_form_domain_errors():
    with pytest.raises(DomainError):
        sl.closed_form_spectrum(FamilySpec.complete(4), MatrixKind.ADJACENCY)
    with pytest.raises(DomainError):
        sl.closed_form_spectrum(FamilySpec.path(1), MatrixKind.ADJACENCY)


def test_cycle_adjacency_pairing():
    # eigenvalue k pairs with eigenvalue n-k
    for n in (5, 8, 9):
        c = 2 * np.cos(2 * np.arange(n) * np.pi / n)
        for k in range(1, n):
            assert c[k] == pytest.approx(c[n - k], abs=1e-12)


def test_regular_graph_rescaling():
    # normalized eigenvalues are difference eigenvalues divided by the degree
    for spec, r in ((FamilySpec.cycle(7), 2), (FamilySpec.complete(6), 5)):
        diff = spectrum_of(spec, MatrixKind.DIFFERENCE).eigenvalues
        norm = spectrum_of(spec, MatrixKind.NORMALIZED).eigenvalues
        assert np.max(np.abs(diff / r - norm)) <= 1e-10


def test_rayleigh_identity():
    for spec in (FamilySpec.roach(2, 3), FamilySpec.lollipop(4, 2),
                 FamilySpec.weighted_path(3, 3)):
        g = sl.generate(spec)
        sp = spectrum_of(spec, MatrixKind.NORMALIZED)
        d = np.array(g.degrees, dtype=float)
        w = sl.build_matrix(g, MatrixKind.ADJACENCY).values
        for j in range(g.n):
            x = sp.eigenvectors[:, j]
            y = x / np.sqrt(d)
            quad = 0.5 * np.sum(w * (y[:, None] - y[None, :]) ** 2)
            assert quad == pytest.approx(sp.eigenvalues[j], abs=1e-8)


def test_automorphism_transfer():
    g = sl.generate(FamilySpec.roach(3, 3))
    m = sl.build_matrix(g, MatrixKind.NORMALIZED).values
    sp = sl.eig_sym(sl.build_matrix(g, MatrixKind.NORMALIZED))
    perm = list(g.mirror)
    for j in range(g.n):
        pu = sp.eigenvectors[:, j][perm]
        assert np.linalg.norm(m @ pu - sp.eigenvalues[j] * pu) <= 1e-8


# ---------------------------------------------------------------------------
# circulants
# ---------------------------------------------------------------------------

def test_circulant_cycle_row():
    vals, _ = sl.circulant_eigenpairs([0, 1, 0, 1])
    assert np.real(vals) == pytest.approx([2.0, 0.0, -2.0, 0.0], abs=1e-12)
    assert np.max(np.abs(np.imag(vals))) <= 1e-12


def test_circulant_scalar_row():
    vals, _ = sl.circulant_eigenpairs([3.5, 0.0, 0.0])
    assert vals == pytest.approx([3.5] * 3)


def test_circulant_residual_random_rows():
    rng = np.random.default_rng(11)
    for _ in range(5):
        row = rng.normal(size=8)
        vals, vecs = sl.circulant_eigenpairs(row)
        c = sl.circulant_matrix(row)
        for k in range(8):
            r = np.linalg.norm(c @ vecs[:, k] - vals[k] * vecs[:, k])
            assert r <= 1e-10


def test_random_walk_form_shares_spectrum():
    # D^{-1} (D - W) is similar to the degree-normalized Laplacian
    for spec in (FamilySpec.weighted_path(3, 3), FamilySpec.lollipop(4, 2)):
        g = sl.generate(spec)
        lap = sl.build_matrix(g, MatrixKind.DIFFERENCE).values
        walk = lap / np.array(g.degrees, dtype=float)[:, None]
        walk_vals = np.sort(np.real(np.linalg.eigvals(walk)))
        norm_vals = spectrum_of(spec, MatrixKind.NORMALIZED).eigenvalues
        assert np.max(np.abs(walk_vals - norm_vals)) <= 1e-10


def test_matrix_csv_dump():
    m = sl.build_matrix(sl.generate(FamilySpec.path(3)), MatrixKind.DIFFERENCE)
    text = sl.matrix_to_csv(m)
    assert text.splitlines() == ["1,-1,0", "-1,2,-1", "0,-1,1"]
