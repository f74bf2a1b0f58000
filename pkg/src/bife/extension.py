"""Boundary-interval Fourier extension.

Only m samples at each end of [-1, 1] enter the extension step. They are
mapped onto a working grid on [0, 2 pi): the right-boundary samples occupy
x_1..x_m and the left-boundary samples x_{L/2+1}..x_{L/2+m}. A truncated-SVD
fit in the 2n+1 modes e^{ikx}/sqrt(L) then supplies g_c, whose values on
x_{m+1}..x_{L/2} glue f smoothly from t = 1 back around to t = -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import dft, linalg
from .grids import ExtensionGeometry, extension_geometry, period_lambda

OPERATOR_VERSION = 1


def round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


@dataclass(frozen=True)
class ExtensionConfig:
    """Tunable parameters of the extension step.

    Parameters
    ----------
    T : float
        Extension ratio, > 1.
    m : int
        Boundary nodes per side, >= 2.
    gamma : float
        Requested oversampling ratio (m-1)/n. The realized ratio after
        rounding n is :attr:`gamma_realized`.
    tau : float
        Absolute singular-value truncation threshold.
    """

    T: float = 6.0
    m: int = 25
    gamma: float = 1.0
    tau: float = 1e-14

    def __post_init__(self):
        object.__setattr__(self, "T", float(self.T))
        object.__setattr__(self, "gamma", float(self.gamma))
        object.__setattr__(self, "tau", float(self.tau))
        geom = extension_geometry(self.T, self.m)  # validates T and m
        object.__setattr__(self, "m", geom.m)
        if not math.isfinite(self.gamma) or self.gamma <= 0:
            raise ValueError(f"gamma must be > 0, got {self.gamma}")
        if not math.isfinite(self.tau) or self.tau < 0:
            raise ValueError(f"tau must be >= 0, got {self.tau}")
        if self.n < 1:
            raise ValueError(f"gamma={self.gamma} leaves no Fourier modes for m={self.m}")
        if 2 * self.n + 1 > geom.L:
            raise ValueError(f"2n+1={2 * self.n + 1} modes exceed the working grid L={geom.L}")

    @classmethod
    def preset(cls, name: str) -> "ExtensionConfig":
        """``"default"`` (T=6, m=25, gamma=1) or ``"oversampled"`` (T=2.3, m=65, gamma=2)."""
        presets = {"default": cls(), "oversampled": cls(T=2.3, m=65, gamma=2.0)}
        try:
            return presets[name]
        except KeyError:
            raise ValueError(f"unknown preset {name!r}; choose from {sorted(presets)}") from None

    @property
    def n(self) -> int:
        return round_half_up((self.m - 1) / self.gamma)

    @property
    def gamma_realized(self) -> float:
        return (self.m - 1) / self.n

    @property
    def geometry(self) -> ExtensionGeometry:
        return extension_geometry(self.T, self.m)


@dataclass(frozen=True, eq=False)
class ExtensionOperator:
    """Precomputed SVD of the system matrix for one configuration."""

    config: ExtensionConfig
    factorization: linalg.SVDFactorization
    version: int = OPERATOR_VERSION

    @property
    def geometry(self) -> ExtensionGeometry:
        return self.config.geometry

    @property
    def rank(self) -> int:
        return linalg.retained_rank(self.factorization, self.config.tau)


@dataclass(frozen=True, eq=False)
class PeriodicSamples:
    """One period of f_c at t_l = l/M, l = -M .. -M + len(values) - 1.

    The period is 2 + lam; the node at 1 + lam is the wrap image of -1 and is
    not stored.
    """

    M: int
    lam: float
    values: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return self.values.shape[-1]

    @property
    def period(self) -> float:
        return 2.0 + self.lam

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(-self.M, -self.M + self.size) / self.M


def build_system_matrix(geom: ExtensionGeometry, n: int) -> np.ndarray:
    """2m x (2n+1) matrix of e^{ikx}/sqrt(L) on the constrained nodes, k ascending."""
    if 2 * n + 1 > geom.L:
        raise ValueError(f"2n+1={2 * n + 1} modes exceed the working grid L={geom.L}")
    if n < 1:
        raise ValueError("n must be >= 1")
    # integer phase index keeps the exponent exact before the final division
    j = geom.rows[:, None]
    k = np.arange(-n, n + 1)[None, :]
    phase = np.mod(j * k, geom.L)
    return np.exp(2j * np.pi * phase / geom.L) / math.sqrt(geom.L)


@lru_cache(maxsize=32)
def precompute_operator(config: ExtensionConfig) -> ExtensionOperator:
    A = build_system_matrix(config.geometry, config.n)
    return ExtensionOperator(config=config, factorization=linalg.svd(A))


def _as_samples(samples, M: int) -> np.ndarray:
    y = np.asarray(samples, dtype=complex)
    if y.ndim != 1 or y.size != 2 * M + 1:
        raise ValueError(f"expected {2 * M + 1} samples for M={M}, got shape {y.shape}")
    return y


def extract_boundary_data(samples, geom: ExtensionGeometry, M: int) -> np.ndarray:
    """Right-boundary values f(t_{M-m+1..M}) followed by left ones f(t_{-M..-M+m-1})."""
    y = _as_samples(samples, M)
    if geom.m > M:
        raise ValueError(f"boundary node count m={geom.m} exceeds M={M}")
    return np.concatenate((y[-geom.m:], y[:geom.m]))


def compute_extension_values(op: ExtensionOperator, g) -> np.ndarray:
    """Values of g_c on the whole working grid x_1..x_L."""
    cfg = op.config
    g = np.asarray(g, dtype=complex)
    if g.shape != (2 * cfg.m,):
        raise ValueError(f"boundary data must have length {2 * cfg.m}, got shape {g.shape}")
    # The exact solve commutes with g -> conj(g), c_k -> conj(c_{-k}). Singular
    # vectors near tau break this at the 1e-3 level in floating point, so
    # average the two equivalent solves to restore it (real g -> real g_c).
    both = linalg.truncated_pinv_apply(op.factorization, np.column_stack((g, g.conj())), cfg.tau)
    c = 0.5 * (both[:, 0] + both[::-1, 1].conj())
    L = op.geometry.L
    C = np.zeros(L, dtype=complex)
    C[np.arange(-cfg.n, cfg.n + 1) % L] = c
    return math.sqrt(L) * dft.ifft(C)


def assemble_periodic_samples(samples, g_c, config: ExtensionConfig, M: int) -> PeriodicSamples:
    """Original samples on [-1, 1] followed by g_c(x_{m+1}) .. g_c(x_{L/2})."""
    geom = config.geometry
    y = _as_samples(samples, M)
    g_c = np.asarray(g_c, dtype=complex)
    if g_c.shape != (geom.L,):
        raise ValueError(f"extension values must have length {geom.L}, got shape {g_c.shape}")
    lam = period_lambda(geom, M)
    values = np.concatenate((y, g_c[geom.m:geom.L // 2]))
    return PeriodicSamples(M=M, lam=lam, values=values)


def periodic_extension(samples, config: ExtensionConfig, M: int) -> PeriodicSamples:
    """Run the whole extension step on 2M+1 uniform samples."""
    op = precompute_operator(config)
    g = extract_boundary_data(samples, op.geometry, M)
    return assemble_periodic_samples(samples, compute_extension_values(op, g), config, M)
