"""Warm-cache runtime of samples -> coefficients for M = 2^lo .. 2^hi."""

import argparse

from bife.experiments import bench, cold_vs_warm, loglog_slope


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--lo", type=int, default=12)
    p.add_argument("--hi", type=int, default=20)
    p.add_argument("--repeats", type=int, default=5)
    args = p.parse_args()

    cold, warm = cold_vs_warm()
    print(f"# M=1000 cold {cold:.4f}s, warm {warm:.4f}s")
    rows = bench([2**k for k in range(args.lo, args.hi + 1)], repeats=args.repeats)
    print("M,seconds,spread")
    for r in rows:
        print(f"{r.M},{r.seconds:.6f},{r.spread:.6f}")
    print(f"# log-log slope {loglog_slope([r.M for r in rows], [r.seconds for r in rows]):.3f}")


if __name__ == "__main__":
    main()
