"""erf, the Airy function Ai and the catalog of test functions.

Ai on the real line is assembled from four pieces:

* Maclaurin series on [-2.5, 1];
* Taylor steps of y'' = x y from precomputed anchors on (1, 9) and (-9, -2.5);
* the large-argument asymptotic series beyond |x| = 9.

On (1, 9) the anchors are generated by stepping down from x = 9, which is the
stable direction for the decaying solution. On the negative axis both
solutions oscillate, so the anchors are stepped outward from the Maclaurin
range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np
import scipy.special

AIRY_MAX_ARG = 160.0

_AI0 = 0.35502805388781723926  # Ai(0)
_AIP0 = -0.25881940379280679840  # Ai'(0)
_SERIES_LO, _SERIES_HI = -2.5, 1.0
_ASYMPTOTIC = 9.0
_ANCHOR_STEP = 0.5
_TAYLOR_TERMS = 40
_MACLAURIN_TERMS = 90


def erf(x) -> np.ndarray:
    """Error function, elementwise."""
    return scipy.special.erf(np.asarray(x, dtype=float))


def _maclaurin(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # a_{k+3} = a_k / ((k+2)(k+3)) from y'' = x y
    a = np.zeros(_MACLAURIN_TERMS)
    a[0], a[1] = _AI0, _AIP0
    for k in range(_MACLAURIN_TERMS - 3):
        a[k + 3] = a[k] / ((k + 2) * (k + 3))
    val = np.zeros_like(x)
    der = np.zeros_like(x)
    for k in range(_MACLAURIN_TERMS - 1, 0, -1):
        val = val * x + a[k]
        der = der * x + k * a[k]
    val = val * x + a[0]
    return val, der


def _taylor(x0, y0, d0, h) -> tuple[np.ndarray, np.ndarray]:
    """Value and derivative of the solution of y'' = x y through (x0, y0, d0) at x0 + h."""
    x0, y0, d0, h = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (x0, y0, d0, h)))
    prev2 = np.zeros_like(y0)  # a_{k-1}
    prev, cur = y0, d0  # a_k, a_{k+1}, starting at k = 0
    val = y0 + d0 * h
    der = d0.copy()
    hk = h.copy()  # h^(k+1)
    for k in range(0, _TAYLOR_TERMS):
        # a_{k+2} = (x0 a_k + a_{k-1}) / ((k+1)(k+2))
        nxt = (x0 * prev + prev2) / ((k + 1) * (k + 2))
        der = der + (k + 2) * nxt * hk
        hk = hk * h
        val = val + nxt * hk
        prev2, prev, cur = prev, cur, nxt
    return val, der


def _u_coefficients(n: int) -> np.ndarray:
    u = np.ones(n)
    for k in range(1, n):
        u[k] = u[k - 1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k)
    return u


_U = _u_coefficients(60)
_V = np.array([1.0] + [-(6 * k + 1) / (6 * k - 1) * _U[k] for k in range(1, 60)])


def _truncated_sum(coeffs: np.ndarray, inv: np.ndarray) -> np.ndarray:
    """sum_k coeffs[k] inv^k, stopped at the smallest term (optimal truncation)."""
    total = np.full_like(inv, coeffs[0])
    last = np.abs(total)
    live = np.ones(inv.shape, dtype=bool)
    power = np.ones_like(inv)
    for k in range(1, coeffs.size):
        power = power * inv
        term = coeffs[k] * power
        mag = np.abs(term)
        live &= mag < last
        total = np.where(live, total + term, total)
        last = np.where(live, mag, last)
        if not live.any():
            break
    return total


def _ai_positive_asymptotic(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    zeta = (2.0 / 3.0) * x * np.sqrt(x)
    inv = -1.0 / zeta
    # exp(-zeta) folded into one exponent to keep precision near underflow
    scale = np.exp(-zeta - 0.25 * np.log(x) - math.log(2 * math.sqrt(math.pi)))
    val = scale * _truncated_sum(_U, inv)
    der = -scale * np.sqrt(x) * _truncated_sum(_V, inv)
    return val, der


def _ai_negative_asymptotic(x: np.ndarray) -> np.ndarray:
    z = -x
    zeta = (2.0 / 3.0) * z * np.sqrt(z)
    inv2 = -1.0 / (zeta * zeta)
    even = _truncated_sum(_U[0::2], inv2)
    odd = _truncated_sum(_U[1::2], inv2) / zeta
    s, c = np.sin(zeta), np.cos(zeta)
    # sin(zeta + pi/4) and cos(zeta + pi/4) without adding pi/4 to a large angle
    sp, cp = (s + c) / math.sqrt(2), (c - s) / math.sqrt(2)
    return (sp * even - cp * odd) / (math.sqrt(math.pi) * z ** 0.25)


def _walk(nodes: np.ndarray, y: float, d: float) -> tuple[list[float], list[float]]:
    ys, ds = [y], [d]
    for x0, x1 in zip(nodes[:-1], nodes[1:]):
        y, d = (float(v) for v in _taylor(x0, y, d, x1 - x0))
        ys.append(y)
        ds.append(d)
    return ys, ds


@lru_cache(maxsize=1)
def _anchors() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nodes, Ai and Ai' on the half-integer grids of (1, 9] and [-9, -2.5]."""
    pos_nodes = np.arange(_ASYMPTOTIC, _SERIES_HI, -_ANCHOR_STEP)
    neg_nodes = np.arange(_SERIES_LO, -_ASYMPTOTIC - 1e-9, -_ANCHOR_STEP)
    y, d = _ai_positive_asymptotic(np.array([_ASYMPTOTIC]))
    pos_y, pos_d = _walk(pos_nodes, float(y[0]), float(d[0]))
    y, d = _maclaurin(np.array([_SERIES_LO]))
    neg_y, neg_d = _walk(neg_nodes, float(y[0]), float(d[0]))
    nodes = np.concatenate((neg_nodes, pos_nodes))
    order = np.argsort(nodes)
    values = np.concatenate((neg_y, pos_y))[order]
    derivs = np.concatenate((neg_d, pos_d))[order]
    return nodes[order], values, derivs


def airy_ai(x) -> np.ndarray:
    """Airy function Ai for real arguments with |x| <= 160, elementwise."""
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("airy_ai needs finite arguments")
    if np.any(np.abs(x) > AIRY_MAX_ARG):
        raise ValueError(f"airy_ai is supported for |x| <= {AIRY_MAX_ARG}")
    flat = x.ravel()
    out = np.empty_like(flat)
    series = (flat >= _SERIES_LO) & (flat <= _SERIES_HI)
    big = flat >= _ASYMPTOTIC
    small = flat <= -_ASYMPTOTIC
    stepped = ~(series | big | small)
    out[series] = _maclaurin(flat[series])[0]
    out[big] = _ai_positive_asymptotic(flat[big])[0]
    out[small] = _ai_negative_asymptotic(flat[small])
    if stepped.any():
        nodes, values, derivs = _anchors()
        xs = flat[stepped]
        i = np.clip(np.searchsorted(nodes, xs), 1, nodes.size - 1)
        i = np.where(np.abs(nodes[i - 1] - xs) < np.abs(nodes[i] - xs), i - 1, i)
        out[stepped] = _taylor(nodes[i], values[i], derivs[i], xs - nodes[i])[0]
    return out.reshape(x.shape)


@dataclass(frozen=True)
class TestFunction:
    name: str
    formula: str
    evaluator: Callable[..., np.ndarray] = field(repr=False)
    parameters: dict = field(default_factory=dict)

    def __call__(self, t) -> np.ndarray:
        return np.asarray(self.evaluator(np.asarray(t, dtype=float), **self.parameters), dtype=complex)


def _plane_wave(t, omega):
    return np.exp(1j * np.pi * omega * t)


_CATALOG = {
    "f1": ("erf(2t)", lambda t: erf(2 * t)),
    "f2": ("Ai(1+3t)", lambda t: airy_ai(1 + 3 * t)),
    "f3": ("exp(sin(2.7 pi t) + cos(pi t))", lambda t: np.exp(np.sin(2.7 * np.pi * t) + np.cos(np.pi * t))),
    "f4": ("1/(1+100t^2)", lambda t: 1 / (1 + 100 * t * t)),
    "f5": ("cos(100/(1+25t^2))", lambda t: np.cos(100 / (1 + 25 * t * t))),
    "f6": ("erf(100t)", lambda t: erf(100 * t)),
    "f7": ("cos(100t^2)", lambda t: np.cos(100 * t * t)),
    "f8": ("Ai(-66-70t)", lambda t: airy_ai(-66 - 70 * t)),
    "f9": (
        "exp(sin(65.5 pi t - 27 pi) - cos(20.6 pi t))",
        lambda t: np.exp(np.sin(65.5 * np.pi * t - 27 * np.pi) - np.cos(20.6 * np.pi * t)),
    ),
    "f10": ("1/(1.01-t^2)", lambda t: 1 / (1.01 - t * t)),
    "f11": ("Ai(150t)", lambda t: airy_ai(150 * t)),
    "f12": ("sin(1500t^2)", lambda t: np.sin(1500 * t * t)),
}

CATALOG_NAMES = tuple(_CATALOG) + ("plane_wave",)


def get_function(name: str, omega: float | None = None) -> TestFunction:
    """Catalog entry ``f1``..``f12`` or ``plane_wave`` (exp(i pi omega t), needs ``omega``)."""
    if name in ("plane_wave", "exp_iw"):
        if omega is None:
            raise ValueError("plane_wave needs omega")
        return TestFunction("plane_wave", "exp(i pi omega t)", _plane_wave, {"omega": float(omega)})
    try:
        formula, fn = _CATALOG[name]
    except KeyError:
        raise ValueError(f"unknown test function {name!r}; choose from {CATALOG_NAMES}") from None
    return TestFunction(name, formula, fn)


def test_function(name: str, t, omega: float | None = None) -> np.ndarray:
    """Evaluate catalog function ``name`` at ``t``."""
    return get_function(name, omega)(t)


test_function.__test__ = False  # keep pytest from collecting it
TestFunction.__test__ = False
