import time

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bife.dft import fft, ifft, naive_dft
from conftest import random_complex


def test_delta_and_dc():
    assert np.allclose(fft([1, 0, 0, 0]), [1, 1, 1, 1], atol=1e-15)
    assert np.allclose(naive_dft([1, 0, 0, 0]), [1, 1, 1, 1], atol=1e-15)
    X = fft(np.full(12, 2.5 - 1j))
    assert X[0] == pytest.approx(12 * (2.5 - 1j))
    assert np.max(np.abs(X[1:])) < 1e-13


def test_length_one_is_identity():
    assert np.array_equal(fft([3 + 4j]), [3 + 4j])
    assert np.array_equal(naive_dft([3 + 4j]), [3 + 4j])


def test_length_360_matches_naive(rng):
    x = random_complex(rng, 360)
    X = fft(x)
    assert np.max(np.abs(X - naive_dft(x))) / np.max(np.abs(X)) < 1e-12


@pytest.mark.parametrize("n", [1, 2, 3, 5, 7, 11, 13, 17, 97, 101, 128, 210, 1009, 2048, 4096 + 17])
def test_forward_inverse_roundtrip(rng, n):
    x = random_complex(rng, n)
    assert np.max(np.abs(ifft(fft(x)) - x)) <= 1e-12 * np.max(np.abs(x))


def test_inverse_convention(rng):
    X = random_complex(rng, 45)
    assert np.allclose(fft(X, "inverse"), naive_dft(X, "inverse"), rtol=0, atol=1e-13)


def test_batched_rows_match_single(rng):
    x = random_complex(rng, 3, 77)
    assert np.allclose(fft(x), np.stack([fft(r) for r in x]), atol=1e-13)


def test_rejects_empty_and_non_finite():
    with pytest.raises(ValueError):
        fft([])
    with pytest.raises(ValueError):
        naive_dft([])
    with pytest.raises(ValueError):
        fft([1.0, np.nan])
    with pytest.raises(ValueError):
        fft([1.0, 2.0], "sideways")


@given(n=st.integers(1, 600), seed=st.integers(0, 2**32 - 1))
def test_parseval_and_linearity(n, seed):
    rng = np.random.default_rng(seed)
    x, y = random_complex(rng, n), random_complex(rng, n)
    X = fft(x)
    assert np.sum(np.abs(x) ** 2) == pytest.approx(np.sum(np.abs(X) ** 2) / n, rel=1e-12)
    assert np.allclose(fft(2 * x - 3j * y), 2 * X - 3j * fft(y), rtol=0, atol=1e-12 * (1 + np.abs(X).max()) * 4)


@given(n=st.integers(2, 400), seed=st.integers(0, 2**32 - 1))
def test_real_input_conjugate_symmetry(n, seed):
    x = np.random.default_rng(seed).standard_normal(n)
    X = fft(x)
    k = np.arange(n)
    assert np.allclose(X[k], np.conj(X[(-k) % n]), rtol=0, atol=1e-12 * np.abs(X).max())


def test_doubling_cost_smoke():
    def best(n):
        x = np.ones(n, dtype=complex)
        fft(x)
        times = []
        for _ in range(5):
            t0 = time.perf_counter()
            fft(x)
            times.append(time.perf_counter() - t0)
        return min(times)

    n = 3 * 2**15
    assert best(2 * n) / best(n) <= 2.6
