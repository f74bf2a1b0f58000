"""Sampling grids, boundary index sets and the extension geometry.

Index conventions: interior nodes are t_l = l/M for l = -M..M. The working
grid of the extension step is x_j = (j-1) h on [0, 2 pi) for j = 1..L with
h = 2 pi / L, and the boundary data sit on J1 = {1..m} and
J2 = {L/2+1..L/2+m} (both 1-based, as in the literature).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


def _check_int(name: str, value, minimum: int) -> int:
    if isinstance(value, bool) or int(value) != value:
        raise ValueError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class UniformGrid:
    """Nodes t_l = l/M, l = -M..M."""

    M: int

    def __post_init__(self):
        object.__setattr__(self, "M", _check_int("M", self.M, 1))

    @property
    def size(self) -> int:
        return 2 * self.M + 1

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.M, self.M + 1)

    @property
    def nodes(self) -> np.ndarray:
        return self.indices / self.M


@dataclass(frozen=True)
class BoundaryIndexSets:
    """Ordered node indices of the left and right boundary intervals."""

    S_l: np.ndarray
    S_r: np.ndarray


@dataclass(frozen=True)
class ExtensionGeometry:
    T: float
    m: int
    L: int

    @property
    def h(self) -> float:
        return 2 * math.pi / self.L

    @property
    def x(self) -> np.ndarray:
        """Working-grid abscissae x_1..x_L (0-based array)."""
        return 2 * math.pi * np.arange(self.L) / self.L

    @property
    def J1(self) -> np.ndarray:
        return np.arange(1, self.m + 1)

    @property
    def J2(self) -> np.ndarray:
        return np.arange(self.L // 2 + 1, self.L // 2 + self.m + 1)

    @property
    def rows(self) -> np.ndarray:
        """0-based working-grid positions of the 2m constrained nodes, in row order."""
        return np.concatenate((self.J1, self.J2)) - 1

    @property
    def n_extension(self) -> int:
        """Extension samples per period, strictly between t=1 and the wrap node."""
        return self.L // 2 - self.m


def extension_geometry(T: float, m: int) -> ExtensionGeometry:
    """Geometry for extension ratio ``T`` and ``m`` boundary nodes per side.

    L = 2 ceil(T (m-1)).
    """
    T = float(T)
    if not math.isfinite(T) or T <= 1:
        raise ValueError(f"extension ratio T must be > 1, got {T}")
    m = _check_int("m", m, 2)
    L = 2 * math.ceil(T * (m - 1))
    return ExtensionGeometry(T=T, m=m, L=L)


def period_lambda(geom: ExtensionGeometry, M: int) -> float:
    """Length lambda of the extension region, so the period is 2 + lambda."""
    M = _check_int("M", M, 1)
    if M < geom.m:
        raise ValueError(f"M={M} is smaller than the boundary node count m={geom.m}")
    return (geom.L // 2 - geom.m + 1) / M


def boundary_index_sets(M: int, m: int) -> BoundaryIndexSets:
    M = _check_int("M", M, 1)
    m = _check_int("m", m, 2)
    if m > M:
        raise ValueError(f"boundary node count m={m} exceeds M={M}")
    return BoundaryIndexSets(S_l=np.arange(-M, -M + m), S_r=np.arange(M - m + 1, M + 1))
