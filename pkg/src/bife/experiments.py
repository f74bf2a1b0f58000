"""Parameter sweeps, resolution search and timing for the CLI and scripts."""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .approximant import coefficients_from_period, max_error
from .baseline import FullDataConfig, fulldata_fe
from .extension import ExtensionConfig, periodic_extension, precompute_operator
from .grids import UniformGrid
from .pipeline import approximation_error
from .special import get_function

SWEEPABLE = ("T", "m", "M", "R", "gamma")


@dataclass(frozen=True)
class SweepSpec:
    """One swept parameter with everything else held fixed.

    ``fixed`` holds values for the non-swept names in :data:`SWEEPABLE`;
    anything missing falls back to the default configuration (M defaults to
    500 and R to 1).
    """

    parameter: str
    values: tuple
    function: str = "plane_wave"
    omega: float | None = 20.0
    fixed: dict = field(default_factory=dict)
    tau: float = 1e-14
    density: int = 10

    def __post_init__(self):
        if self.parameter not in SWEEPABLE:
            raise ValueError(f"cannot sweep {self.parameter!r}; choose from {SWEEPABLE}")
        values = tuple(self.values)
        if not values:
            raise ValueError("sweep needs at least one value")
        if any(v <= 0 for v in values) or any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("swept values must be positive and strictly increasing")
        object.__setattr__(self, "values", values)
        unknown = set(self.fixed) - set(SWEEPABLE)
        if unknown:
            raise ValueError(f"unknown fixed parameters {sorted(unknown)}")

    def point(self, value) -> dict:
        base = ExtensionConfig()
        p = {"T": base.T, "m": base.m, "gamma": base.gamma, "M": 500, "R": 1}
        p.update(self.fixed)
        p[self.parameter] = value
        return p


@dataclass(frozen=True)
class SweepRow:
    value: float
    error: float
    seconds: float
    note: str = ""


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Error and wall time per swept value; failed points record ``nan``."""
    f = get_function(spec.function, spec.omega)
    rows = []
    for value in spec.values:
        p = spec.point(value)
        start = time.perf_counter()
        try:
            cfg = ExtensionConfig(T=p["T"], m=int(p["m"]), gamma=p["gamma"], tau=spec.tau)
            err = approximation_error(f, int(p["M"]), cfg, R=int(p["R"]), density=spec.density)
            note = "" if math.isfinite(err) else "non-finite"
        except (ValueError, IndexError) as exc:
            err, note = math.nan, str(exc)
        rows.append(SweepRow(float(value), err, time.perf_counter() - start, note))
    return rows


def first_below(values: Sequence[float], errors: Sequence[float], threshold: float) -> float | None:
    for v, e in zip(values, errors):
        if e < threshold:
            return v
    return None


def first_above_after_plateau(values, errors, plateau: float, threshold: float) -> float | None:
    """First value whose error exceeds ``threshold`` after the error has dipped below ``plateau``."""
    seen = False
    for v, e in zip(values, errors):
        seen = seen or e < plateau
        if seen and not e <= threshold:
            return v
    return None


def estimate_T1(
    gamma: float,
    omegas: Sequence[float] = tuple(range(1, 51)),
    M: int = 500,
    m: int = 100,
    threshold: float = 1e-13,
    T_values: Sequence[float] | None = None,
    tau: float = 1e-14,
) -> tuple[float, dict]:
    """Mean over ``omegas`` of the first T whose error on exp(i pi omega t) is below ``threshold``.

    T runs upward in steps of 0.1. Operators are shared across frequencies,
    and the scan stops once every frequency has crossed. Returns the mean
    and the per-frequency crossings (``None`` where none was found).
    """
    if T_values is None:
        T_values = np.round(np.arange(1.1, 60.0, 0.1), 10)
    pending = list(omegas)
    crossing: dict = {w: None for w in omegas}
    t = UniformGrid(M).nodes
    for T in T_values:
        if not pending:
            break
        try:
            cfg = ExtensionConfig(T=float(T), m=m, gamma=gamma, tau=tau)
            precompute_operator(cfg)
        except ValueError:
            continue
        for w in list(pending):
            f = get_function("plane_wave", w)
            approx = coefficients_from_period(periodic_extension(f(t), cfg, M))
            if max_error(approx, f, M) < threshold:
                crossing[w] = float(T)
                pending.remove(w)
        precompute_operator.cache_clear()
    found = [v for v in crossing.values() if v is not None]
    mean = statistics.fmean(found) if found else math.nan
    return mean, crossing


def search_resolution(error_of: Callable[[int], float], delta: float, lo: int, hi: int, guard: int = 2) -> int:
    """Smallest M in [lo, hi] with error_of(M + i) <= delta for i = 0..guard.

    Bisection, where "passes" means the next ``guard`` grid steps pass too, so
    an isolated lucky dip cannot end the search. Raises ``LookupError`` when
    even ``hi`` fails.
    """
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    if lo < 1 or hi < lo:
        raise ValueError("need 1 <= lo <= hi")
    memo: dict[int, float] = {}

    def err(M):
        if M not in memo:
            try:
                memo[M] = error_of(M)
            except (ValueError, IndexError):
                memo[M] = math.inf
        return memo[M]

    def passes(M):
        return all(err(M + i) <= delta for i in range(guard + 1))

    if not passes(hi):
        raise LookupError(f"no M in [{lo}, {hi}] reaches error {delta:g}")
    if passes(lo):
        return lo
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if passes(mid):
            hi = mid
        else:
            lo = mid
    return hi


def boundary_error_fn(f, config: ExtensionConfig | None = None, R: int = 1, density: int = 10):
    return lambda M: approximation_error(f, M, config, R=R, density=density)


def fulldata_error_fn(f, cfg: FullDataConfig | None = None, density: int = 10):
    cfg = cfg or FullDataConfig()

    def err(M):
        return max_error(fulldata_fe(f(UniformGrid(M).nodes), cfg), f, M, density)

    return err


@dataclass(frozen=True)
class BenchRow:
    M: int
    seconds: float
    spread: float


def bench(Ms: Sequence[int], config: ExtensionConfig | None = None, repeats: int = 5) -> list[BenchRow]:
    """Median warm-cache time of samples -> coefficients for each M.

    The operator is built once before timing, so only the O(M log M) part is
    measured. ``spread`` is max - min over the repeats.
    """
    config = config or ExtensionConfig()
    precompute_operator(config)
    rows = []
    for M in Ms:
        y = np.cos(20 * UniformGrid(M).nodes)
        times = []
        for _ in range(repeats):
            start = time.perf_counter()
            coefficients_from_period(periodic_extension(y, config, M))
            times.append(time.perf_counter() - start)
        rows.append(BenchRow(int(M), statistics.median(times), max(times) - min(times)))
    return rows


def loglog_slope(xs, ys) -> float:
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


def cold_vs_warm(config: ExtensionConfig | None = None, M: int = 1000) -> tuple[float, float]:
    """Seconds for one run with the operator built from scratch, then with it cached."""
    config = config or ExtensionConfig()
    precompute_operator.cache_clear()
    y = np.cos(20 * UniformGrid(M).nodes)
    times = []
    for _ in range(2):
        start = time.perf_counter()
        coefficients_from_period(periodic_extension(y, config, M))
        times.append(time.perf_counter() - start)
    return times[0], times[1]


def singular_plateau(config: ExtensionConfig, level: float = 0.9) -> int:
    """Number of singular values of the system matrix at or above ``level``."""
    return int(np.count_nonzero(precompute_operator(config).factorization.s >= level))
