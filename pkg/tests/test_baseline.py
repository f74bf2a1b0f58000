import numpy as np
import pytest

from bife.approximant import max_error
from bife.baseline import FullDataConfig, fulldata_fe, fulldata_matrix
from bife.experiments import fulldata_error_fn, search_resolution
from bife.grids import UniformGrid
from bife.pipeline import approximate_function
from bife.special import get_function


def test_config_sizes():
    cfg = FullDataConfig(T=2, gamma=2)
    assert cfg.N(200) == 100 and cfg.gamma_realized(200) == 2.0
    assert FullDataConfig(gamma=3).N(10) == 3
    for bad in (dict(T=1.0), dict(gamma=0), dict(tau=-1)):
        with pytest.raises(ValueError):
            FullDataConfig(**bad)


def test_matrix_shape_and_period():
    A = fulldata_matrix(10, 4, 2.0)
    assert A.shape == (21, 9)
    t = np.arange(-10, 11) / 10
    assert np.allclose(A[:, 5], np.exp(1j * np.pi * t / 2))


@pytest.mark.parametrize("cfg", [FullDataConfig(), FullDataConfig(T=3, gamma=4)])
def test_constant_is_exact(cfg):
    M = 80
    a = fulldata_fe(np.ones(2 * M + 1), cfg)
    assert a.period == 2 * cfg.T
    assert max_error(a, lambda t: np.ones_like(t), M) <= 1e-12


def test_plane_wave_T2_gamma2():
    f = get_function("plane_wave", 20)
    M = 200
    assert max_error(fulldata_fe(f(UniformGrid(M).nodes), FullDataConfig()), f, M) <= 1e-10


def test_stagnation_for_small_T_gamma():
    f = get_function("plane_wave", 20)
    errs = [max_error(fulldata_fe(f(UniformGrid(M).nodes), FullDataConfig(T=1.2, gamma=1)), f, M) for M in (100, 300, 500)]
    assert min(errs) > 1e-6


def test_rejects_large_M_and_bad_length():
    with pytest.raises(ValueError):
        fulldata_fe(np.ones(2003), FullDataConfig())
    with pytest.raises(ValueError):
        fulldata_fe(np.ones(10), FullDataConfig())


@pytest.mark.parametrize("name", ["f1", "f2", "f3"])
def test_agrees_with_boundary_method(name):
    f = get_function(name)
    M = 256
    full = fulldata_fe(f(UniformGrid(M).nodes), FullDataConfig())
    boundary = approximate_function(f, M)
    assert max_error(full, f, M) <= 1e-10 and max_error(boundary, f, M) <= 1e-10
    assert max_error(full, lambda t: boundary(t), M, density=4) <= 1e-9


@pytest.mark.slow
def test_resolution_scales_with_frequency():
    # nodes for 1e-10 on exp(i pi w t) track T gamma w = 4 w within 25%
    for w in (10, 20, 40):
        M = search_resolution(fulldata_error_fn(get_function("plane_wave", w)), 1e-10, 10, 400)
        assert 0.75 * 4 * w <= M <= 1.25 * 4 * w, (w, M)
