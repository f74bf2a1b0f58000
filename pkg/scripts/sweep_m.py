"""Error against the boundary node count m, at fixed T and gamma.

    python3 scripts/sweep_m.py --T 6 --gamma 1
    python3 scripts/sweep_m.py --T 2.3 --gamma 2 --m-max 90
"""

import argparse

from _common import write_rows
from bife.experiments import SweepSpec, run_sweep


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--T", type=float, default=6.0)
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--omega", type=float, default=20.0)
    p.add_argument("--M", type=int, default=500)
    p.add_argument("--m-min", type=int, default=5)
    p.add_argument("--m-max", type=int, default=40)
    p.add_argument("--threshold", type=float, default=1e-12)
    p.add_argument("--output")
    args = p.parse_args()

    spec = SweepSpec(
        "m",
        tuple(range(args.m_min, args.m_max + 1)),
        omega=args.omega,
        fixed={"T": args.T, "gamma": args.gamma, "M": args.M},
    )
    rows = run_sweep(spec)
    write_rows([(int(r.value), r.error, r.note) for r in rows], ["m", "max_error", "note"], args.output)
    below = [r.error < args.threshold for r in rows]
    first = next((int(r.value) for r, b in zip(rows, below) if b), None)
    sustained = next((int(rows[i].value) for i in range(len(rows)) if all(below[i:])), None)
    print(f"# first m below {args.threshold:g}: {first}; below from then on: {sustained}")


if __name__ == "__main__":
    main()
