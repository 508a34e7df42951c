import numpy as np
import pytest

from sparse_rc import linalg
from sparse_rc.errors import DimensionError, NumericError


def test_svd_identity():
    res = linalg.svd(np.eye(3))
    assert np.allclose(res.s, [1, 1, 1], atol=1e-14)


def test_svd_diagonal():
    res = linalg.svd(np.diag([3.0, 2.0, 1.0]))
    assert np.allclose(res.s, [3, 2, 1], atol=1e-14)


def test_svd_reconstruction_and_orthonormality():
    a = np.random.default_rng(0).normal(size=(10, 4))
    res = linalg.svd(a)
    recon = res.u @ np.diag(res.s) @ res.vt
    assert np.linalg.norm(recon - a) <= 1e-10 * np.linalg.norm(a)
    assert np.abs(res.u.T @ res.u - np.eye(4)).max() <= 1e-10
    assert np.abs(res.vt @ res.vt.T - np.eye(4)).max() <= 1e-10
    assert np.all(np.diff(res.s) <= 0) and np.all(res.s >= 0)


def test_svd_rejects_bad_shape():
    with pytest.raises(DimensionError):
        linalg.svd(np.zeros(3))


def test_lstsq_identity_design():
    b = np.arange(6.0).reshape(3, 2)
    assert np.allclose(linalg.lstsq_min_norm(np.eye(3), b), b, atol=1e-14)


def test_lstsq_mean_of_two_points():
    a = np.array([[1.0], [1.0]])
    b = np.array([[1.0], [3.0]])
    assert linalg.lstsq_min_norm(a, b)[0, 0] == pytest.approx(2.0, abs=1e-14)


def test_lstsq_construct_and_recover():
    gen = np.random.default_rng(1)
    a = gen.normal(size=(50, 5))
    x0 = gen.normal(size=(5, 3))
    x = linalg.lstsq_min_norm(a, a @ x0)
    assert np.abs(x - x0).max() <= 1e-8


def test_lstsq_residual_orthogonality():
    gen = np.random.default_rng(2)
    a = gen.normal(size=(40, 6))
    b = gen.normal(size=(40, 2))
    x = linalg.lstsq_min_norm(a, b)
    resid = a.T @ (a @ x - b)
    assert np.abs(resid).max() <= 1e-8 * np.linalg.norm(a) * np.linalg.norm(b)


def test_lstsq_shape_mismatch():
    with pytest.raises(DimensionError):
        linalg.lstsq_min_norm(np.eye(3), np.zeros((4, 1)))


def test_covariance_identical_rows():
    states = np.tile([1.0, -2.0, 0.5], (20, 1))
    assert np.allclose(linalg.covariance_eigenvalues(states), 0.0, atol=1e-25)


def test_covariance_rank_one():
    t = np.random.default_rng(3).normal(size=100)
    states = np.column_stack([t, -t])
    lam = linalg.covariance_eigenvalues(states)
    assert lam[0] > 0 and abs(lam[1]) <= 1e-12 * lam[0]


def test_covariance_matches_explicit_matrix():
    # independent path: eigendecomposition of the explicitly formed 5x5 covariance
    states = np.random.default_rng(4).normal(size=(200, 5))
    lam = linalg.covariance_eigenvalues(states)
    centered = states - states.mean(axis=0)
    cov = centered.T @ centered / (states.shape[0] - 1)
    expected = np.sort(np.linalg.eigvalsh(cov))[::-1]
    assert np.abs(lam - expected).max() <= 1e-10


def test_covariance_trace_identity():
    states = np.random.default_rng(5).normal(size=(150, 8))
    lam = linalg.covariance_eigenvalues(states)
    total_var = states.var(axis=0, ddof=1).sum()
    assert lam.sum() == pytest.approx(total_var, rel=1e-10)


def test_covariance_needs_two_samples():
    with pytest.raises(NumericError):
        linalg.covariance_eigenvalues(np.zeros((1, 4)))


def test_covariance_pads_to_column_count():
    # fewer samples than columns still yields N eigenvalues
    lam = linalg.covariance_eigenvalues(np.random.default_rng(6).normal(size=(3, 7)))
    assert lam.shape == (7,)
