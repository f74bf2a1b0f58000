"""Full-data discrete Fourier extension.

All 2M+1 samples are fitted by sum_{k=-N}^{N} c_k exp(i pi k t / T) in the
least-squares sense with a truncated SVD. This costs O(M^3) and only serves
as a reference at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .approximant import FourierApproximant
from .extension import round_half_up

MAX_M = 1000


@dataclass(frozen=True)
class FullDataConfig:
    """Parameters of the full-data fit.

    ``gamma`` = M/N is the requested oversampling ratio; ``tau`` is relative
    to the largest singular value.
    """

    T: float = 2.0
    gamma: float = 2.0
    tau: float = 1e-14

    def __post_init__(self):
        if not math.isfinite(self.T) or self.T <= 1:
            raise ValueError(f"T must be > 1, got {self.T}")
        if not math.isfinite(self.gamma) or self.gamma <= 0:
            raise ValueError(f"gamma must be > 0, got {self.gamma}")
        if not math.isfinite(self.tau) or self.tau < 0:
            raise ValueError(f"tau must be >= 0, got {self.tau}")

    def N(self, M: int) -> int:
        return max(1, round_half_up(M / self.gamma))

    def gamma_realized(self, M: int) -> float:
        return M / self.N(M)


def fulldata_matrix(M: int, N: int, T: float) -> np.ndarray:
    t = np.arange(-M, M + 1) / M
    k = np.arange(-N, N + 1)
    return np.exp(1j * np.pi / T * np.outer(t, k))


def fulldata_fe(samples, cfg: FullDataConfig) -> FourierApproximant:
    """Fit 2M+1 uniform samples on [-1, 1]; the result has period 2T."""
    y = np.asarray(samples, dtype=complex)
    if y.ndim != 1 or y.size < 3 or y.size % 2 == 0:
        raise ValueError("expected 2M+1 samples with M >= 1")
    M = (y.size - 1) // 2
    if M > MAX_M:
        raise ValueError(f"full-data baseline is limited to M <= {MAX_M}, got {M}")
    N = cfg.N(M)
    A = fulldata_matrix(M, N, cfg.T)
    # gesdd fails to converge on some of these matrices; gesvd is robust
    U, s, Vh = scipy.linalg.svd(A, full_matrices=False, lapack_driver="gesvd")
    keep = s > cfg.tau * s[0]
    c = Vh[keep].conj().T @ ((U[:, keep].conj().T @ y) / s[keep])
    # exp(i pi k t / T) = exp(2 pi i k t / P) with P = 2T
    return FourierApproximant(period=2.0 * cfg.T, coefficients=c)
