import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bife.linalg import AllModesTruncatedWarning, SVDFactorization, retained_rank, svd, truncated_pinv_apply
from conftest import random_complex


def _orth_error(Q):
    return np.max(np.abs(Q.conj().T @ Q - np.eye(Q.shape[1])))


def _check_factorization(A, F, tol=1e-13):
    assert F.U.shape == (A.shape[0], min(A.shape))
    assert F.V.shape == (A.shape[1], min(A.shape))
    assert np.all(F.s >= 0) and np.all(np.diff(F.s) <= 0)
    assert _orth_error(F.U) <= tol and _orth_error(F.V) <= tol
    assert np.linalg.norm(F.reconstruct() - A) <= tol * max(np.linalg.norm(A), 1e-300)


def test_diagonal_and_identity():
    F = svd(np.diag([1.0, 3.0]))
    assert np.allclose(F.s, [3, 1], atol=1e-15)
    F = svd(np.eye(3))
    assert np.allclose(F.s, 1, atol=1e-15)
    assert np.allclose(np.abs(F.U.conj().T @ F.V), np.eye(3), atol=1e-14)


def test_random_6x4_against_gram_eigenvalues(rng):
    A = random_complex(rng, 6, 4)
    F = svd(A)
    _check_factorization(A, F)
    eig = np.sort(np.linalg.eigvalsh(A.conj().T @ A))[::-1]
    assert np.allclose(F.s**2, eig, rtol=0, atol=1e-12 * eig[0])


@pytest.mark.parametrize("shape", [(200, 130), (130, 200), (64, 64), (1, 5), (5, 1), (256, 9)])
def test_seeded_reconstruction(rng, shape):
    A = random_complex(rng, *shape)
    _check_factorization(A, svd(A))


def test_rank_deficient_and_zero():
    rng = np.random.default_rng(3)
    B = random_complex(rng, 40, 5) @ random_complex(rng, 5, 30)
    F = svd(B)
    _check_factorization(B, F)
    assert retained_rank(F, 1e-10 * F.s[0]) == 5
    Z = svd(np.zeros((4, 3)))
    assert np.array_equal(Z.s, np.zeros(3))


def test_system_matrix_like_spectrum():
    # clustered singular values near 1 followed by rapid decay
    from bife.extension import ExtensionConfig, build_system_matrix

    cfg = ExtensionConfig(T=6, m=60, gamma=1)
    A = build_system_matrix(cfg.geometry, cfg.n)
    F = svd(A)
    _check_factorization(A, F)
    ref = np.linalg.svd(A, compute_uv=False)
    assert np.max(np.abs(F.s - ref)) <= 1e-13


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        svd(np.array([[1.0, np.inf]]))
    with pytest.raises(ValueError):
        svd(np.zeros((0, 3)))


def test_truncated_apply_examples():
    F = svd(np.eye(3))
    assert np.allclose(truncated_pinv_apply(F, [1, 2, 3], 1e-14), [1, 2, 3], atol=1e-14)
    F = svd(np.diag([3.0, 1e-16]))
    assert np.allclose(truncated_pinv_apply(F, [6, 5], 1e-14), [2, 0], atol=1e-14)


def test_truncation_is_strict():
    F = SVDFactorization(U=np.eye(2, dtype=complex), s=np.array([2.0, 1.0]), V=np.eye(2, dtype=complex))
    assert retained_rank(F, 1.0) == 1


def test_all_modes_truncated_warns():
    F = svd(np.diag([1e-16, 1e-17]))
    with pytest.warns(AllModesTruncatedWarning):
        c = truncated_pinv_apply(F, [1, 1], 1e-14)
    assert np.array_equal(c, np.zeros(2))


def test_truncated_matches_projected_normal_equations(rng):
    A = random_complex(rng, 8, 5)
    # make two directions negligible
    U, s, Vh = np.linalg.svd(A, full_matrices=False)
    s[3:] = [1e-15, 1e-16]
    A = (U * s) @ Vh
    b = random_complex(rng, 8)
    F = svd(A)
    c = truncated_pinv_apply(F, b, 1e-12)
    # oracle: solve the normal equations inside span(v_1..v_3) computed independently
    w, W = np.linalg.eigh(A.conj().T @ A)
    basis = W[:, np.argsort(w)[::-1][:3]]
    AB = A @ basis
    y = np.linalg.solve(AB.conj().T @ AB, AB.conj().T @ b)
    assert np.max(np.abs(c - basis @ y)) <= 1e-11 * np.max(np.abs(c))


def test_full_rank_exact_solve(rng):
    A = random_complex(rng, 12, 12)
    x = random_complex(rng, 12)
    c = truncated_pinv_apply(svd(A), A @ x, 0.0)
    assert np.linalg.norm(c - x) <= 1e-11 * np.linalg.norm(x)


@given(seed=st.integers(0, 2**32 - 1), rows=st.integers(1, 24), cols=st.integers(1, 24))
def test_property_factorization(seed, rows, cols):
    A = random_complex(np.random.default_rng(seed), rows, cols)
    _check_factorization(A, svd(A))


@given(seed=st.integers(0, 2**32 - 1))
def test_row_swaps_leave_singular_values(seed):
    rng = np.random.default_rng(seed)
    A = random_complex(rng, 15, 9)
    perm = rng.permutation(15)
    assert np.allclose(svd(A).s, svd(A[perm]).s, rtol=0, atol=1e-13 * np.linalg.norm(A))


@given(seed=st.integers(0, 2**32 - 1))
def test_apply_is_linear(seed):
    rng = np.random.default_rng(seed)
    F = svd(random_complex(rng, 10, 7))
    b1, b2 = random_complex(rng, 10), random_complex(rng, 10)
    lhs = truncated_pinv_apply(F, b1 + b2, 1e-14)
    rhs = truncated_pinv_apply(F, b1, 1e-14) + truncated_pinv_apply(F, b2, 1e-14)
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(1.0, np.max(np.abs(lhs)))
