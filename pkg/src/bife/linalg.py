"""Dense complex SVD and truncated pseudo-inverse solves.

The SVD is a one-sided (Hestenes) Jacobi method on the triangular factor of
a column-pivoted QR, run in two stages:

1. block sweeps, where each pair of column blocks is orthogonalised at once
   from the eigenvectors of its Gram matrix (fast, absolute accuracy);
2. exact 2x2 rotations in round-robin order until every pair of columns
   above the noise floor is orthogonal relative to its own norms.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

_EPS = np.finfo(float).eps
_BLOCK = 16


class AllModesTruncatedWarning(RuntimeWarning):
    """No singular value exceeded the truncation threshold."""


@dataclass(frozen=True)
class SVDFactorization:
    """Thin SVD ``A = U @ diag(s) @ V.conj().T``.

    ``U`` is rows x r, ``V`` is cols x r and ``s`` is non-increasing, with
    r = min(rows, cols).
    """

    U: np.ndarray
    s: np.ndarray
    V: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.U.shape[0], self.V.shape[0]

    def reconstruct(self) -> np.ndarray:
        return (self.U * self.s) @ self.V.conj().T


def _round_robin(n: int) -> list[list[tuple[int, int]]]:
    """Rounds of disjoint pairs covering every pair of 0..n-1 exactly once."""
    players = list(range(n)) + ([-1] if n % 2 else [])
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        pairs = []
        for i in range(size // 2):
            a, b = players[i], players[size - 1 - i]
            if a >= 0 and b >= 0:
                pairs.append((min(a, b), max(a, b)))
        rounds.append(pairs)
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _block_sweeps(B: np.ndarray, V: np.ndarray, max_sweeps: int) -> None:
    n = B.shape[1]
    blocks = [np.arange(i, min(i + _BLOCK, n)) for i in range(0, n, _BLOCK)]
    if len(blocks) == 1:
        schedule = [[(0, 0)]]
    else:
        schedule = _round_robin(len(blocks))
    tol = _EPS * np.sqrt(B.shape[0])
    abs_tol = _EPS * np.linalg.norm(B) ** 2
    for _ in range(max_sweeps):
        rotated = False
        for pairs in schedule:
            for i, j in pairs:
                idx = blocks[i] if i == j else np.concatenate((blocks[i], blocks[j]))
                X = B[:, idx]
                G = X.conj().T @ X
                d = np.sqrt(np.abs(np.diag(G)))
                off = np.abs(G)
                np.fill_diagonal(off, 0.0)
                if np.all((off <= tol * np.outer(d, d)) | (off <= abs_tol)):
                    continue
                _, W = np.linalg.eigh(G)
                # keep each eigenvector on the column it is closest to, or the
                # sweep keeps undoing earlier work
                home = np.argmax(np.abs(W), axis=0)
                if np.unique(home).size == home.size:
                    Wp = np.empty_like(W)
                    Wp[:, home] = W
                    W = Wp
                B[:, idx] = X @ W
                V[:, idx] = V[:, idx] @ W
                rotated = True
        if not rotated:
            return


def _pair_sweeps(B: np.ndarray, V: np.ndarray, max_sweeps: int) -> None:
    n = B.shape[1]
    if n < 2:
        return
    tol = _EPS * np.sqrt(B.shape[0])
    schedule = []
    for pairs in _round_robin(n):
        p, q = zip(*pairs)
        schedule.append((np.array(p, dtype=np.intp), np.array(q, dtype=np.intp)))
    for _ in range(max_sweeps):
        rotated = False
        for p, q in schedule:
            bp, bq = B[:, p], B[:, q]
            alpha = np.einsum("ij,ij->j", bp.real, bp.real) + np.einsum("ij,ij->j", bp.imag, bp.imag)
            beta = np.einsum("ij,ij->j", bq.real, bq.real) + np.einsum("ij,ij->j", bq.imag, bq.imag)
            gamma = np.einsum("ij,ij->j", bp.conj(), bq)
            mag = np.abs(gamma)
            active = (mag > tol * np.sqrt(alpha * beta)) & (mag > 0)
            if not active.any():
                continue
            rotated = True
            p_, q_ = p[active], q[active]
            alpha, beta, mag = alpha[active], beta[active], mag[active]
            phase = gamma[active] / mag
            zeta = (beta - alpha) / (2.0 * mag)
            t = np.where(zeta >= 0, 1.0, -1.0) / (np.abs(zeta) + np.sqrt(1.0 + zeta * zeta))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = c * t
            # right-multiply columns (p, q) by [[c, s], [-s conj(phase), c conj(phase)]]
            for X in (B, V):
                xp, xq = X[:, p_], X[:, q_] * np.conj(phase)
                X[:, p_] = c * xp - s * xq
                X[:, q_] = s * xp + c * xq
        if not rotated:
            return


def _jacobi(X: np.ndarray, max_sweeps: int) -> tuple[np.ndarray, np.ndarray]:
    """Return (X W, W) with W unitary and the columns of X W orthogonal."""
    B = X.copy()
    W = np.eye(B.shape[1], dtype=complex)
    _block_sweeps(B, W, max_sweeps)
    # columns at the noise floor only need absolute accuracy
    norms = np.linalg.norm(B, axis=0)
    live = np.flatnonzero(norms > 4 * _EPS * np.linalg.norm(B))
    Bl, Wl = B[:, live], W[:, live]
    _pair_sweeps(Bl, Wl, max_sweeps)
    B[:, live], W[:, live] = Bl, Wl
    return B, W


def svd(A, max_sweeps: int = 40) -> SVDFactorization:
    """Thin singular value decomposition of a dense complex matrix.

    Parameters
    ----------
    A : array_like
        rows x cols matrix with finite entries.
    max_sweeps : int
        Cap on the number of sweeps in each Jacobi stage.

    Returns
    -------
    SVDFactorization
    """
    A = np.array(A, dtype=complex, ndmin=2)
    if A.ndim != 2 or 0 in A.shape:
        raise ValueError("svd needs a non-empty 2-D matrix")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix contains non-finite entries")
    wide = A.shape[0] < A.shape[1]
    work = A.conj().T if wide else A
    # work[:, perm] = Q R; Jacobi on R^H converges in far fewer sweeps than on work
    Q, R, perm = scipy.linalg.qr(work, mode="economic", pivoting=True)
    Z, W = _jacobi(R.conj().T, max_sweeps)
    s = np.linalg.norm(Z, axis=0)
    order = np.argsort(-s, kind="stable")
    s, Z, W = s[order], Z[:, order], W[:, order]
    # Z = U_R diag(s); QR keeps the columns orthonormal even where s is at noise level
    Qz, Rz = np.linalg.qr(Z)
    d = np.diag(Rz)
    mag = np.abs(d)
    phase = np.where(mag > 0, d / np.where(mag > 0, mag, 1.0), 1.0)
    right = np.empty_like(Qz)
    right[perm] = Qz * phase
    left = Q @ W
    if wide:
        left, right = right, left
    return SVDFactorization(U=left, s=s, V=right)


def retained_rank(F: SVDFactorization, tau: float) -> int:
    """Number of singular values strictly above ``tau``."""
    return int(np.count_nonzero(F.s > tau))


def truncated_pinv_apply(F: SVDFactorization, b, tau: float) -> np.ndarray:
    """Truncated-SVD least-squares solution sum_{s_i > tau} (u_i^H b / s_i) v_i.

    ``b`` may be a vector or a matrix of right-hand sides (one per column).
    Warns with :class:`AllModesTruncatedWarning` and returns zeros when no
    singular value exceeds ``tau``.
    """
    b = np.asarray(b, dtype=complex)
    if b.shape[0] != F.U.shape[0]:
        raise ValueError(f"right-hand side has length {b.shape[0]}, expected {F.U.shape[0]}")
    if tau < 0:
        raise ValueError("tau must be non-negative")
    r = retained_rank(F, tau)
    if r == 0:
        warnings.warn("every singular value is below tau", AllModesTruncatedWarning, stacklevel=2)
        return np.zeros((F.V.shape[0],) + b.shape[1:], dtype=complex)
    proj = F.U[:, :r].conj().T @ b
    scale = F.s[:r] if proj.ndim == 1 else F.s[:r, None]
    return F.V[:, :r] @ (proj / scale)
