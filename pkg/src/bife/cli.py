"""Command-line entry point ``bife``.

Exit codes: 0 success, 2 invalid input or parameters, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import cache, experiments
from .approximant import coefficients_from_period, evaluate_on_grid, max_error
from .baseline import FullDataConfig, fulldata_fe
from .extension import ExtensionConfig, periodic_extension, precompute_operator
from .grids import UniformGrid
from .refined import RefinedConfig, fine_boundary_nodes, refined_extension
from .special import CATALOG_NAMES, get_function

EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL = 0, 2, 3
GRID_TOL = 1e-12


class NumericalFailure(RuntimeError):
    pass


# ---------------------------------------------------------------- csv helpers


def read_samples_csv(path) -> tuple[np.ndarray, np.ndarray]:
    """Read a ``t,re,im`` file (``im`` optional). Returns abscissae and complex values."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"t", "re"} <= set(reader.fieldnames):
            raise ValueError(f"{path}: header must contain t,re (and optionally im)")
        t, v = [], []
        for lineno, row in enumerate(reader, start=2):
            try:
                t.append(float(row["t"]))
                v.append(complex(float(row["re"]), float(row.get("im") or 0.0)))
            except (TypeError, ValueError):
                raise ValueError(f"{path}:{lineno}: malformed row {row}") from None
    t, v = np.array(t), np.array(v, dtype=complex)
    if not (np.all(np.isfinite(t)) and np.all(np.isfinite(v))):
        raise ValueError(f"{path}: non-finite entries")
    return t, v


def grid_M(t: np.ndarray) -> int:
    """M such that t = l/M, l = -M..M, or ValueError."""
    if t.size < 3 or t.size % 2 == 0:
        raise ValueError(f"need 2M+1 >= 3 samples, got {t.size}")
    M = (t.size - 1) // 2
    if np.max(np.abs(t - UniformGrid(M).nodes)) > GRID_TOL:
        raise ValueError("abscissae are not the uniform grid l/M on [-1, 1]")
    return M


def write_csv(path, header, rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow([repr(float(x)) if isinstance(x, (float, np.floating)) else x for x in row])


def emit(result: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        json.dump(result, out, indent=2, default=float)
        out.write("\n")
    else:
        w = csv.writer(out)
        w.writerow(result.keys())
        w.writerow(result.values())


def parse_values(text: str) -> list[float]:
    """``a,b,c`` or ``start:stop:step`` (stop inclusive within half a step)."""
    if ":" in text:
        start, stop, step = (float(x) for x in text.split(":"))
        if step <= 0:
            raise ValueError("step must be positive")
        count = int(math.floor((stop - start) / step + 0.5)) + 1
        return [round(start + i * step, 10) for i in range(count)]
    return [float(x) for x in text.split(",") if x.strip()]


# ---------------------------------------------------------------- commands


def _config(args) -> ExtensionConfig:
    return ExtensionConfig(T=args.Tdelta, m=args.mdelta, gamma=args.gamma, tau=args.tau)


def cmd_approximate(args) -> int:
    cfg = _config(args)
    f = None
    if args.input:
        t, y = read_samples_csv(args.input)
        M = grid_M(t)
        if args.R > 1:
            if not args.fine_input:
                raise ValueError("R > 1 with file input needs --fine-input")
            rc = RefinedConfig(cfg, args.R)
            ft, fv = read_samples_csv(args.fine_input)
            left, right = fine_boundary_nodes(rc, M)
            expected = np.concatenate((left, right))
            if ft.shape != expected.shape or np.max(np.abs(ft - expected)) > GRID_TOL:
                raise ValueError(f"fine boundary file must list t = l/(RM) for the {rc.m_fine} outermost nodes per side, left then right")
            periodic = refined_extension(y, fv[: rc.m_fine], fv[rc.m_fine:], rc, M)
        else:
            periodic = periodic_extension(y, cfg, M)
        if args.function:
            f = get_function(args.function, args.omega)
    else:
        if not args.function or args.M is None:
            raise ValueError("give --input, or --function together with --M")
        f = get_function(args.function, args.omega)
        M = args.M
        y = f(UniformGrid(M).nodes)
        if args.R > 1:
            rc = RefinedConfig(cfg, args.R)
            left, right = fine_boundary_nodes(rc, M)
            periodic = refined_extension(y, f(left), f(right), rc, M)
        else:
            periodic = periodic_extension(y, cfg, M)
    approx = coefficients_from_period(periodic)
    if not np.all(np.isfinite(approx.coefficients)):
        raise NumericalFailure("non-finite coefficients")
    result = {"M": M, "T": cfg.T, "m": cfg.m, "gamma": cfg.gamma_realized, "R": args.R, "period": approx.period}
    if f is not None:
        result["max_error"] = max_error(approx, f, M, args.density)
    if args.output:
        prefix = Path(args.output)
        write_csv(f"{prefix}_coefficients.csv", ["k", "re", "im"],
                  ((int(k), c.real, c.imag) for k, c in zip(approx.modes, approx.coefficients)))
        n = args.density * M
        j = np.arange(-n, n + 1)
        dense = evaluate_on_grid(approx, 1.0 / n, j)
        write_csv(f"{prefix}_dense.csv", ["t", "re", "im"], ((jj / n, v.real, v.imag) for jj, v in zip(j, dense)))
    emit(result, args.format)
    return EXIT_OK


def cmd_sweep(args) -> int:
    fixed = {k: v for k, v in (("T", args.Tdelta), ("m", args.mdelta), ("gamma", args.gamma),
                                ("M", args.M), ("R", args.R)) if v is not None and k != args.param}
    spec = experiments.SweepSpec(parameter=args.param, values=tuple(parse_values(args.values)),
                                 function=args.function, omega=args.omega, fixed=fixed,
                                 tau=args.tau, density=args.density)
    rows = experiments.run_sweep(spec)
    header = [args.param, "max_error", "seconds", "note"]
    table = [(r.value, r.error, r.seconds, r.note) for r in rows]
    if args.output:
        if args.format == "json":
            Path(args.output).write_text(json.dumps([dict(zip(header, r)) for r in table], indent=2))
        else:
            write_csv(args.output, header, table)
    else:
        w = csv.writer(sys.stdout)
        w.writerow(header)
        w.writerows(table)
    return EXIT_OK


def cmd_resolution(args) -> int:
    f = get_function(args.function, args.omega)
    if args.method == "fulldata":
        fn = experiments.fulldata_error_fn(f, FullDataConfig(T=args.T, gamma=args.fd_gamma, tau=args.tau), args.density)
    else:
        fn = experiments.boundary_error_fn(f, _config(args), args.R, args.density)
    try:
        M_star = experiments.search_resolution(fn, args.delta, args.lo, args.hi)
    except LookupError as exc:
        raise NumericalFailure(str(exc)) from None
    emit({"method": args.method, "function": args.function, "omega": args.omega, "delta": args.delta, "M": M_star},
         args.format)
    return EXIT_OK


def cmd_bench(args) -> int:
    Ms = [int(v) for v in parse_values(args.Ms)]
    if any(b <= a for a, b in zip(Ms, Ms[1:])):
        raise ValueError("M list must be increasing")
    cold, warm = experiments.cold_vs_warm(_config(args))
    rows = experiments.bench(Ms, _config(args), repeats=args.repeats)
    table = [(r.M, r.seconds, r.spread) for r in rows]
    if args.output:
        write_csv(args.output, ["M", "seconds", "spread"], table)
    else:
        w = csv.writer(sys.stdout)
        w.writerow(["M", "seconds", "spread"])
        w.writerows(table)
    summary = {"cold_seconds": cold, "warm_seconds": warm}
    if len(Ms) > 1:
        summary["loglog_slope"] = experiments.loglog_slope(Ms, [r.seconds for r in rows])
    print(json.dumps(summary), file=sys.stderr)
    return EXIT_OK


def cmd_cache(args) -> int:
    cfg = _config(args)
    if args.action == "save":
        path = cache.save_operator(precompute_operator(cfg), args.path)
        emit({"saved": str(path), "rank": precompute_operator(cfg).rank}, args.format)
    else:
        op = cache.load_operator(args.path, cfg)
        emit({"loaded": str(args.path), "rank": op.rank, "sigma_max": float(op.factorization.s[0])}, args.format)
    return EXIT_OK


def cmd_compare(args) -> int:
    f = get_function(args.function, args.omega)
    M = args.M
    t = UniformGrid(M).nodes
    y = f(t)
    boundary = coefficients_from_period(periodic_extension(y, _config(args), M))
    full = fulldata_fe(y, FullDataConfig(T=args.T, gamma=args.fd_gamma, tau=args.tau))
    n = args.density * M
    j = np.arange(-n, n + 1)
    gap = np.max(np.abs(evaluate_on_grid(boundary, 1.0 / n, j) - evaluate_on_grid(full, 1.0 / n, j)))
    emit({"function": args.function, "M": M,
          "boundary_error": max_error(boundary, f, M, args.density),
          "fulldata_error": max_error(full, f, M, args.density),
          "max_difference": float(gap)}, args.format)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    defaults = ExtensionConfig()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--Tdelta", type=float, default=defaults.T)
    common.add_argument("--mdelta", type=int, default=defaults.m)
    common.add_argument("--gamma", type=float, default=defaults.gamma)
    common.add_argument("--tau", type=float, default=defaults.tau)
    common.add_argument("--R", type=int, default=1)
    common.add_argument("--M", type=int)
    common.add_argument("--function", choices=CATALOG_NAMES + ("exp_iw",))
    common.add_argument("--omega", type=float)
    common.add_argument("--density", type=int, default=10)
    common.add_argument("--output")
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    p = argparse.ArgumentParser(prog="bife", description="Boundary-interval Fourier extension")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("approximate", parents=[common], help="approximate one function or sample file")
    a.add_argument("--input", help="CSV with columns t,re[,im] on l/M, l=-M..M")
    a.add_argument("--fine-input", help="CSV of fine boundary samples (left then right) when R > 1")
    a.set_defaults(run=cmd_approximate)

    s = sub.add_parser("sweep", parents=[common], help="error against one parameter")
    s.add_argument("--param", choices=experiments.SWEEPABLE, required=True)
    s.add_argument("--values", required=True, help="a,b,c or start:stop:step")
    s.set_defaults(run=cmd_sweep)

    r = sub.add_parser("resolution", parents=[common], help="smallest M reaching a tolerance")
    r.add_argument("--delta", type=float, default=1e-10)
    r.add_argument("--lo", type=int, default=25)
    r.add_argument("--hi", type=int, default=1000)
    r.add_argument("--method", choices=("boundary", "fulldata"), default="boundary")
    r.add_argument("--T", type=float, default=2.0, help="full-data extension half-length")
    r.add_argument("--fd-gamma", type=float, default=2.0, help="full-data oversampling ratio")
    r.set_defaults(run=cmd_resolution)

    b = sub.add_parser("bench", parents=[common], help="warm-cache timing against M")
    b.add_argument("--Ms", default="16384,32768,65536,131072,262144,524288,1048576")
    b.add_argument("--repeats", type=int, default=5)
    b.set_defaults(run=cmd_bench)

    c = sub.add_parser("cache", parents=[common], help="save or load a precomputed operator")
    c.add_argument("action", choices=("save", "load"))
    c.add_argument("--path", required=True)
    c.set_defaults(run=cmd_cache)

    k = sub.add_parser("compare", parents=[common], help="boundary method against the full-data fit")
    k.add_argument("--T", type=float, default=2.0)
    k.add_argument("--fd-gamma", type=float, default=2.0)
    k.set_defaults(run=cmd_compare)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # parent-parser actions are shared between verbs, so per-verb defaults live here
    if args.command in ("sweep", "resolution") and args.function is None:
        args.function = "plane_wave"
    if args.command == "compare" and args.M is None:
        args.M = 256
    if getattr(args, "function", None) in ("plane_wave", "exp_iw") and args.omega is None:
        args.omega = 20.0
    try:
        return args.run(args)
    except NumericalFailure as exc:
        print(f"bife: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, IndexError, OSError, cache.CacheError) as exc:
        print(f"bife: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
