import cmath
import time

import numpy as np
import pytest

from sparse_rc import rng
from sparse_rc.errors import DegenerateSpectrumError, DimensionError
from sparse_rc.sparse import SparseMatrix, matvec, rescale_to_radius, spectral_radius


def random_fixed_degree(n, k, seed, label="m"):
    s = rng.derive_stream(seed, label)
    rows = [(rng.sample_without_replacement(s, n, k), rng.uniform(s, -1, 1, k))
            for _ in range(n)]
    return SparseMatrix.from_rows(n, n, rows)


# ---------------------------------------------------------------- matvec

def test_matvec_identity():
    m = SparseMatrix.from_dense(np.eye(4))
    v = np.array([1.0, -2.0, 3.5, 0.0])
    assert np.array_equal(matvec(m, v), v)


def test_matvec_zero_row():
    dense = np.array([[0.0, 0.0], [1.0, 2.0]])
    m = SparseMatrix.from_dense(dense)
    out = matvec(m, np.array([3.0, 4.0]))
    assert out[0] == 0.0 and out[1] == 11.0


def test_matvec_against_dense_oracle():
    gen = np.random.default_rng(0)
    for case in range(200):
        m = random_fixed_degree(50, 7, seed=case)
        v = gen.normal(size=50)
        assert np.abs(matvec(m, v) - m.to_dense() @ v).max() <= 1e-12


def test_matvec_ragged_rows_against_dense():
    # non-uniform degrees exercise the generic CSR path
    gen = np.random.default_rng(1)
    dense = gen.normal(size=(30, 30)) * (gen.random((30, 30)) < 0.2)
    dense[5] = 0.0
    m = SparseMatrix.from_dense(dense)
    v = gen.normal(size=30)
    assert np.abs(matvec(m, v) - dense @ v).max() <= 1e-12


def test_matvec_length_mismatch():
    m = SparseMatrix.from_dense(np.eye(3))
    with pytest.raises(DimensionError):
        matvec(m, np.zeros(4))


def test_matvec_time_linear_in_degree():
    # smoke perf check: chi=100 should cost roughly 10x chi=10 at fixed N
    n = 20000
    m10 = random_fixed_degree(n, 10, seed=0, label="t10")
    m100 = random_fixed_degree(n, 100, seed=0, label="t100")
    v = np.random.default_rng(0).normal(size=n)

    def best_of(m, reps=30):
        best = float("inf")
        for _ in range(reps):
            t0 = time.perf_counter()
            matvec(m, v)
            best = min(best, time.perf_counter() - t0)
        return best

    ratio = best_of(m100) / best_of(m10)
    assert 6 <= ratio <= 14, f"timing ratio {ratio:.2f} outside linear-scaling bounds"


# ---------------------------------------------------------------- spectral radius

def quadratic_radius(a):
    tr, det = a[0, 0] + a[1, 1], a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    d = cmath.sqrt(tr * tr - 4 * det)
    return max(abs((tr + d) / 2), abs((tr - d) / 2))


def cubic_radius(a):
    # Cardano closed form on the characteristic polynomial; independent of
    # any eigenvalue routine
    c2 = -np.trace(a)
    c1 = sum(a[i, i] * a[j, j] - a[i, j] * a[j, i]
             for i in range(3) for j in range(i + 1, 3))
    c0 = -np.linalg.det(a)
    p = c1 - c2 * c2 / 3
    q = 2 * c2**3 / 27 - c2 * c1 / 3 + c0
    d = cmath.sqrt((q / 2) ** 2 + (p / 3) ** 3)
    u = (-q / 2 + d) ** (1 / 3)
    if abs(u) < 1e-30:
        u = (-q / 2 - d) ** (1 / 3)
    if abs(u) < 1e-30:
        return abs(-c2 / 3)
    v = -p / (3 * u)
    w = cmath.exp(2j * cmath.pi / 3)
    return max(abs(u * w**k + v * w**-k - c2 / 3) for k in range(3))


def test_radius_identity():
    assert spectral_radius(SparseMatrix.from_dense(np.eye(5))) == pytest.approx(1.0)


def test_radius_rotation():
    # eigenvalues are the complex pair +/- i
    rot = SparseMatrix.from_dense(np.array([[0.0, 1.0], [-1.0, 0.0]]))
    assert spectral_radius(rot) == pytest.approx(1.0, rel=1e-10)


def test_radius_diagonal():
    m = SparseMatrix.from_dense(np.diag([0.5, -2.0]))
    assert spectral_radius(m) == pytest.approx(2.0, rel=1e-10)


def test_radius_zero_matrix():
    m = SparseMatrix(2, 2, [0, 0, 0], [], [])
    assert spectral_radius(m) == 0.0


def test_radius_requires_square():
    with pytest.raises(DimensionError):
        spectral_radius(SparseMatrix.from_dense(np.ones((2, 3))))


def test_radius_matches_quadratic_oracle():
    gen = np.random.default_rng(7)
    for _ in range(100):
        a = gen.normal(size=(2, 2))
        got = spectral_radius(SparseMatrix.from_dense(a))
        assert got == pytest.approx(quadratic_radius(a), rel=1e-3)


def test_radius_matches_cubic_oracle():
    gen = np.random.default_rng(8)
    for _ in range(100):
        a = gen.normal(size=(3, 3))
        got = spectral_radius(SparseMatrix.from_dense(a))
        assert got == pytest.approx(cubic_radius(a), rel=1e-3)


def test_radius_scales_linearly():
    for seed in range(10):
        m = random_fixed_degree(40, 5, seed=seed)
        rho = spectral_radius(m)
        assert spectral_radius(m.scaled(-2.5)) == pytest.approx(2.5 * rho, rel=1e-3)


# ---------------------------------------------------------------- rescaling

def test_rescale_halves_known_radius():
    m = SparseMatrix.from_dense(np.diag([2.0, 1.0]))
    out = rescale_to_radius(m, 0.9)
    assert np.allclose(out.values, m.values * 0.45)


def test_rescale_fixed_point():
    m = random_fixed_degree(30, 4, seed=3)
    at_target = rescale_to_radius(m, 0.9)
    again = rescale_to_radius(at_target, 0.9)
    assert np.abs(again.values - at_target.values).max() <= 1e-12


def test_rescale_hits_target():
    m = random_fixed_degree(100, 10, seed=4)
    out = rescale_to_radius(m, 0.9)
    assert 0.8991 <= spectral_radius(out) <= 0.9009


def test_rescale_degenerate_spectrum():
    nilpotent = SparseMatrix.from_dense(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(DegenerateSpectrumError):
        rescale_to_radius(nilpotent, 0.9)


# ---------------------------------------------------------------- layout checks

def test_csr_invariants_validated():
    with pytest.raises(DimensionError):
        SparseMatrix(2, 2, [0, 1], [0], [1.0])  # row_ptr too short
    with pytest.raises(DimensionError):
        SparseMatrix(2, 2, [0, 1, 1], [5], [1.0])  # column out of range


def test_column_indices_sorted_within_rows():
    m = SparseMatrix.from_rows(2, 5, [([4, 0, 2], [1.0, 2.0, 3.0]), ([1], [4.0])])
    assert m.col_idx.tolist() == [0, 2, 4, 1]
    assert m.values.tolist() == [2.0, 3.0, 1.0, 4.0]
