"""Boundary-interval fast Fourier extension."""

from .approximant import FourierApproximant, coefficients_from_period, evaluate, max_error
from .baseline import FullDataConfig, fulldata_fe
from .extension import (
    ExtensionConfig,
    ExtensionOperator,
    PeriodicSamples,
    assemble_periodic_samples,
    build_system_matrix,
    compute_extension_values,
    extract_boundary_data,
    precompute_operator,
)
from .grids import UniformGrid, boundary_index_sets, extension_geometry, period_lambda
from .pipeline import approximate_function, approximate_samples, approximation_error
from .refined import RefinedConfig, assemble_refined, refined_boundary_data
from .special import airy_ai, erf, get_function, test_function

__all__ = [
    "ExtensionConfig",
    "ExtensionOperator",
    "FourierApproximant",
    "FullDataConfig",
    "PeriodicSamples",
    "RefinedConfig",
    "UniformGrid",
    "airy_ai",
    "approximate_function",
    "approximate_samples",
    "approximation_error",
    "assemble_periodic_samples",
    "assemble_refined",
    "boundary_index_sets",
    "build_system_matrix",
    "coefficients_from_period",
    "compute_extension_values",
    "erf",
    "evaluate",
    "extension_geometry",
    "extract_boundary_data",
    "fulldata_fe",
    "get_function",
    "max_error",
    "period_lambda",
    "precompute_operator",
    "refined_boundary_data",
    "test_function",
]
