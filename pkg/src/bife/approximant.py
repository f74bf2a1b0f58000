"""Trigonometric approximants built from one period of samples.

An approximant is f(t) ~ sum_{k=-K}^{K} c_k exp(2 pi i k t / P). Coefficients
are stored for ascending k. On any uniform grid that divides the period the
sum is evaluated by a zero-padded inverse FFT; elsewhere it is summed directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import dft
from .extension import PeriodicSamples

# points x coefficients per block of direct summation
_DIRECT_BLOCK = 1 << 20


@dataclass(frozen=True, eq=False)
class FourierApproximant:
    period: float
    coefficients: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=complex)
        if c.ndim != 1 or c.size % 2 == 0:
            raise ValueError("coefficients must be a 1-D array of odd length (k = -K..K)")
        if not (math.isfinite(self.period) and self.period > 0):
            raise ValueError(f"period must be positive, got {self.period}")
        object.__setattr__(self, "coefficients", c)

    @property
    def K(self) -> int:
        return self.coefficients.size // 2

    @property
    def modes(self) -> np.ndarray:
        return np.arange(-self.K, self.K + 1)

    def __call__(self, t) -> np.ndarray:
        return evaluate(self, t)


def coefficients_from_period(p: PeriodicSamples) -> FourierApproximant:
    """Interpolating trigonometric polynomial through one period of samples.

    For even N_p the Nyquist coefficient is split evenly between k = +-N_p/2,
    which keeps real data real.
    """
    v = np.asarray(p.values, dtype=complex)
    N = v.size
    if N < 3:
        raise ValueError(f"need at least 3 samples per period, got {N}")
    X = dft.fft(v) / N
    K = N // 2
    k = np.arange(-K, K + 1)
    c = X[k % N]
    if N % 2 == 0:
        c[0] *= 0.5
        c[-1] *= 0.5
    # samples start at l = -M; shift the phase origin to t = 0
    c = c * np.exp(2j * np.pi * np.mod(k * p.M, N) / N)
    return FourierApproximant(period=N / p.M, coefficients=c)


def evaluate_direct(a: FourierApproximant, points) -> np.ndarray:
    """Per-point summation of the series (O(points x modes))."""
    t = np.asarray(points, dtype=float)
    if not np.all(np.isfinite(t)):
        raise ValueError("evaluation points must be finite")
    flat = np.mod(t.ravel(), a.period)
    k = a.modes
    out = np.empty(flat.size, dtype=complex)
    step = max(1, _DIRECT_BLOCK // k.size)
    for s in range(0, flat.size, step):
        block = flat[s:s + step]
        out[s:s + step] = np.exp((2j * np.pi / a.period) * np.outer(block, k)) @ a.coefficients
    return out.reshape(t.shape)


def _grid_size(a: FourierApproximant, spacing: float) -> int | None:
    """Number of grid points per period if ``spacing`` divides the period."""
    Q = round(a.period / spacing)
    if Q < 1 or abs(Q * spacing - a.period) > 1e-12 * a.period:
        return None
    return Q


def evaluate_on_grid(a: FourierApproximant, spacing: float, j) -> np.ndarray:
    """Values at t = j * spacing for integer ``j``.

    Uses one inverse FFT of length Q = P/spacing when that is an integer, and
    direct summation otherwise. Modes are folded mod Q, which is exact at the
    grid points whatever Q is.
    """
    j = np.asarray(j)
    Q = _grid_size(a, spacing)
    if Q is None:
        return evaluate_direct(a, j * spacing)
    D = np.zeros(Q, dtype=complex)
    np.add.at(D, a.modes % Q, a.coefficients)
    values = Q * dft.ifft(D)
    return values[np.mod(j, Q)]


def evaluate(a: FourierApproximant, points) -> np.ndarray:
    """Evaluate the approximant at arbitrary real points (periodic wraparound)."""
    return evaluate_direct(a, points)


def max_error(a: FourierApproximant, reference: Callable, M: int, density: int = 10) -> float:
    """Largest deviation from ``reference`` on t = l/(density M), |l| <= density M."""
    if density < 2:
        raise ValueError("density must be >= 2")
    n = density * M
    j = np.arange(-n, n + 1)
    approx = evaluate_on_grid(a, 1.0 / n, j)
    return float(np.max(np.abs(approx - reference(j / n))))
