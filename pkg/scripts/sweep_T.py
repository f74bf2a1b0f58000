"""Error against the extension ratio T for exp(i pi omega t).

Shows the three regimes: fast decay, a plateau near machine precision and
the rebound once T grows past roughly M / (gamma omega).

    python3 scripts/sweep_T.py --omega 20 --m 100 --M 500 > T_sweep.csv
"""

import argparse

import numpy as np

from _common import write_rows
from bife.experiments import SweepSpec, first_above_after_plateau, run_sweep


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--omega", type=float, default=20.0)
    p.add_argument("--m", type=int, default=100)
    p.add_argument("--M", type=int, default=500)
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--T-max", type=float, default=45.0)
    p.add_argument("--step", type=float, default=0.5)
    p.add_argument("--output")
    args = p.parse_args()

    Ts = tuple(np.round(np.arange(1.5, args.T_max + 1e-9, args.step), 10))
    spec = SweepSpec("T", Ts, omega=args.omega, fixed={"m": args.m, "M": args.M, "gamma": args.gamma})
    rows = run_sweep(spec)
    write_rows([(r.value, r.error, r.seconds) for r in rows], ["T", "max_error", "seconds"], args.output)
    onset = first_above_after_plateau([r.value for r in rows], [r.error for r in rows], 1e-12, 1e-10)
    print(f"# rebound onset (error > 1e-10 after plateau): T = {onset}")


if __name__ == "__main__":
    main()
