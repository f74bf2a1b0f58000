"""Boundary-grid refinement.

The boundary intervals are sampled R times finer than the interior, so the
extension step sees m^R = R(m-1)+1 nodes spanning the same physical width as
the m coarse ones. Only every R-th value of the fine g_c is kept, which puts
the extension samples back on the coarse spacing 1/M.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .extension import (
    ExtensionConfig,
    PeriodicSamples,
    _as_samples,
    assemble_periodic_samples,
    compute_extension_values,
    precompute_operator,
)
from .grids import period_lambda


@dataclass(frozen=True)
class RefinedConfig:
    base: ExtensionConfig
    R: int = 1

    def __post_init__(self):
        if isinstance(self.R, bool) or int(self.R) != self.R or self.R < 1:
            raise ValueError(f"refinement factor R must be a positive integer, got {self.R!r}")
        object.__setattr__(self, "R", int(self.R))
        if self.R > 1 and self.base.T * (self.base.m - 1) != math.ceil(self.base.T * (self.base.m - 1)):
            # fine and coarse extension nodes only line up when T(m-1) is an integer
            raise ValueError("refinement needs T*(m-1) to be an integer")

    @property
    def m_fine(self) -> int:
        return self.R * (self.base.m - 1) + 1

    @property
    def fine(self) -> ExtensionConfig:
        """Extension config on the fine boundary grid (same T, gamma and tau)."""
        if self.R == 1:
            return self.base
        return ExtensionConfig(T=self.base.T, m=self.m_fine, gamma=self.base.gamma, tau=self.base.tau)


def fine_boundary_nodes(rc: RefinedConfig, M: int) -> tuple[np.ndarray, np.ndarray]:
    """Abscissae (left, right) of the fine boundary samples, spacing 1/(RM)."""
    RM = rc.R * M
    mR = rc.m_fine
    if mR > RM:
        raise ValueError(f"fine boundary node count {mR} exceeds R*M={RM}")
    left = np.arange(-RM, -RM + mR) / RM
    right = np.arange(RM - mR + 1, RM + 1) / RM
    return left, right


def refined_boundary_data(fine_left, fine_right, rc: RefinedConfig) -> np.ndarray:
    """Stack fine right-boundary values then fine left-boundary values."""
    fine_left = np.asarray(fine_left, dtype=complex)
    fine_right = np.asarray(fine_right, dtype=complex)
    for name, v in (("left", fine_left), ("right", fine_right)):
        if v.shape != (rc.m_fine,):
            raise ValueError(f"fine {name} boundary data must have length {rc.m_fine}, got shape {v.shape}")
    return np.concatenate((fine_right, fine_left))


def assemble_refined(coarse_samples, g_c_fine, rc: RefinedConfig, M: int) -> PeriodicSamples:
    """Coarse samples followed by every R-th fine extension value."""
    if rc.R == 1:
        return assemble_periodic_samples(coarse_samples, g_c_fine, rc.base, M)
    y = _as_samples(coarse_samples, M)
    fine_geom = rc.fine.geometry
    g_c_fine = np.asarray(g_c_fine, dtype=complex)
    if g_c_fine.shape != (fine_geom.L,):
        raise ValueError(f"fine extension values must have length {fine_geom.L}, got shape {g_c_fine.shape}")
    geom = rc.base.geometry
    # 1-based fine index m^R + (l - M) R for l = M+1 .. M + L/2 - m
    idx = rc.m_fine + np.arange(1, geom.n_extension + 1) * rc.R
    if idx.size and idx[-1] > fine_geom.L:
        raise IndexError("extension index runs past the fine working grid")
    values = np.concatenate((y, g_c_fine[idx - 1]))
    return PeriodicSamples(M=M, lam=period_lambda(geom, M), values=values)


def refined_extension(coarse_samples, fine_left, fine_right, rc: RefinedConfig, M: int) -> PeriodicSamples:
    op = precompute_operator(rc.fine)
    g = refined_boundary_data(fine_left, fine_right, rc)
    return assemble_refined(coarse_samples, compute_extension_values(op, g), rc, M)
