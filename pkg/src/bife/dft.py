"""Arbitrary-length discrete Fourier transforms.

Mixed-radix decimation in time over the small prime factors of the length,
with Bluestein's chirp-z convolution for whatever large-prime cofactor is
left. Conventions::

    forward:  X[k] = sum_j x[j] exp(-2 pi i j k / N)
    inverse:  x[j] = (1/N) sum_k X[k] exp(+2 pi i j k / N)

All transforms act on the last axis, so a 2-D array is a batch of rows.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

# prime factors above this go through Bluestein
_MAX_RADIX = 13


def _factor(n: int) -> tuple[list[int], int]:
    """Split n into small radices (4 preferred over 2x2) and a leftover cofactor."""
    radices = []
    while n % 4 == 0:
        radices.append(4)
        n //= 4
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            radices.append(p)
            n //= p
    return radices, n


def _smooth_at_least(n: int) -> int:
    """Smallest 2^a 3^b 5^c integer >= n."""
    best = 1 << max(0, (n - 1).bit_length())
    p5 = 1
    while p5 < best:
        p35 = p5
        while p35 < best:
            p = p35
            while p < n:
                p *= 2
            best = min(best, p)
            p35 *= 3
        p5 *= 5
    return best


def _unit_roots(exponents: np.ndarray, n: int) -> np.ndarray:
    # exp(-2 pi i e / n) with e reduced mod n first, so the angle stays small
    e = np.mod(exponents, n)
    return np.exp(-2j * np.pi * (e / n))


@lru_cache(maxsize=64)
def _twiddles(n: int, p: int) -> np.ndarray:
    m = n // p
    r = np.arange(p, dtype=np.int64)[:, None]
    k = np.arange(m, dtype=np.int64)[None, :]
    w = _unit_roots(r * k, n)
    w.flags.writeable = False
    return w


@lru_cache(maxsize=32)
def _radix_matrix(p: int) -> np.ndarray:
    q = np.arange(p, dtype=np.int64)
    w = _unit_roots(np.outer(q, q), p)
    w.flags.writeable = False
    return w


@lru_cache(maxsize=16)
def _bluestein_plan(n: int) -> tuple[np.ndarray, np.ndarray, int]:
    nfft = _smooth_at_least(2 * n - 1)
    j = np.arange(n, dtype=np.int64)
    # exp(-i pi j^2 / n) with j^2 reduced mod 2n
    chirp = np.exp(-1j * np.pi * (np.mod(j * j, 2 * n) / n))
    kernel = np.zeros(nfft, dtype=complex)
    kernel[:n] = np.conj(chirp)
    kernel[nfft - n + 1:] = np.conj(chirp[1:])[::-1]
    kernel_hat = _fft_rows(kernel[None, :])[0]
    chirp.flags.writeable = False
    kernel_hat.flags.writeable = False
    return chirp, kernel_hat, nfft


def _bluestein_rows(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    chirp, kernel_hat, nfft = _bluestein_plan(n)
    buf = np.zeros((a.shape[0], nfft), dtype=complex)
    buf[:, :n] = a * chirp
    conv = _ifft_rows(_fft_rows(buf) * kernel_hat)
    return conv[:, :n] * chirp


def _fft_rows(a: np.ndarray) -> np.ndarray:
    """Forward transform of every row of a 2-D complex array."""
    batch, n = a.shape
    if n == 1:
        return a.copy()
    radices, rest = _factor(n)
    if not radices:
        if rest <= _MAX_RADIX:
            return a @ _radix_matrix(rest).T
        return _bluestein_rows(a)
    p = radices[0]
    m = n // p
    # decimation in time: row r of each sub-block holds x[r::p]
    sub = a.reshape(batch, m, p).transpose(0, 2, 1).reshape(batch * p, m)
    sub = _fft_rows(sub).reshape(batch, p, m)
    sub *= _twiddles(n, p)
    if p == 2:
        out = np.concatenate((sub[:, 0] + sub[:, 1], sub[:, 0] - sub[:, 1]), axis=1)
    elif p == 4:
        s0, s1, s2, s3 = sub[:, 0], sub[:, 1], sub[:, 2], sub[:, 3]
        a02, b02 = s0 + s2, s0 - s2
        a13, b13 = s1 + s3, -1j * (s1 - s3)
        out = np.concatenate((a02 + a13, b02 + b13, a02 - a13, b02 - b13), axis=1)
    else:
        out = np.matmul(_radix_matrix(p), sub).reshape(batch, n)
    return out


def _ifft_rows(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    return np.conj(_fft_rows(np.conj(a))) / n


def _as_rows(x) -> tuple[np.ndarray, tuple[int, ...]]:
    arr = np.asarray(x, dtype=complex)
    if arr.ndim == 0 or arr.shape[-1] == 0:
        raise ValueError("transform length must be at least 1")
    if not np.all(np.isfinite(arr)):
        raise ValueError("transform input contains non-finite values")
    shape = arr.shape
    return np.ascontiguousarray(arr.reshape(-1, shape[-1])), shape


def fft(x, direction: str = "forward") -> np.ndarray:
    """Discrete Fourier transform of any length along the last axis.

    Parameters
    ----------
    x : array_like
        Complex or real input; the last axis is transformed.
    direction : {"forward", "inverse"}
        ``inverse`` carries the 1/N factor.

    Returns
    -------
    ndarray
        Complex array with the same shape as ``x``.
    """
    rows, shape = _as_rows(x)
    if direction == "forward":
        out = _fft_rows(rows)
    elif direction == "inverse":
        out = _ifft_rows(rows)
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return out.reshape(shape)


def ifft(x) -> np.ndarray:
    return fft(x, "inverse")


def naive_dft(x, direction: str = "forward") -> np.ndarray:
    """O(N^2) direct summation with the same contract as :func:`fft`."""
    rows, shape = _as_rows(x)
    n = shape[-1]
    j = np.arange(n, dtype=np.int64)
    kernel = _unit_roots(np.outer(j, j), n)
    if direction == "forward":
        out = rows @ kernel.T
    elif direction == "inverse":
        out = rows @ np.conj(kernel).T / n
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return out.reshape(shape)
