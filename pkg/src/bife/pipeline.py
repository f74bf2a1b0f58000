"""End-to-end helpers: samples or a function in, approximant or error out."""

from __future__ import annotations

from typing import Callable

import numpy as np

from .approximant import FourierApproximant, coefficients_from_period, max_error
from .extension import ExtensionConfig, PeriodicSamples, periodic_extension
from .grids import UniformGrid
from .refined import RefinedConfig, fine_boundary_nodes, refined_extension


def approximate_samples(samples, M: int, config: ExtensionConfig | None = None) -> FourierApproximant:
    """Approximant from 2M+1 uniform samples on [-1, 1]."""
    config = config or ExtensionConfig()
    return coefficients_from_period(periodic_extension(samples, config, M))


def periodic_samples_of(f: Callable, M: int, config: ExtensionConfig | None = None, R: int = 1) -> PeriodicSamples:
    """Sample ``f`` on the uniform grid (and the fine boundary grid if R > 1) and extend."""
    config = config or ExtensionConfig()
    y = np.asarray(f(UniformGrid(M).nodes), dtype=complex)
    if R == 1:
        return periodic_extension(y, config, M)
    rc = RefinedConfig(config, R)
    left, right = fine_boundary_nodes(rc, M)
    return refined_extension(y, f(left), f(right), rc, M)


def approximate_function(f: Callable, M: int, config: ExtensionConfig | None = None, R: int = 1) -> FourierApproximant:
    return coefficients_from_period(periodic_samples_of(f, M, config, R))


def approximation_error(
    f: Callable, M: int, config: ExtensionConfig | None = None, R: int = 1, density: int = 10
) -> float:
    """Max error on [-1, 1] of the boundary-interval approximant of ``f``."""
    return max_error(approximate_function(f, M, config, R), f, M, density)
