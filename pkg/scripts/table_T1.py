"""Smallest useful extension ratio per oversampling ratio.

For each gamma, the mean over omega = 1..50 of the first T (step 0.1) at
which exp(i pi omega t) is resolved to 1e-13 with M = 500, m = 100. Takes a
few minutes on one core.
"""

import argparse
import time

from bife.experiments import estimate_T1


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--gammas", default="2,1,0.5")
    args = p.parse_args()

    print("gamma,T1,unresolved,seconds")
    for g in (float(v) for v in args.gammas.split(",")):
        start = time.perf_counter()
        mean, crossing = estimate_T1(g)
        missing = sum(v is None for v in crossing.values())
        print(f"{g:g},{mean:.3f},{missing},{time.perf_counter() - start:.1f}", flush=True)


if __name__ == "__main__":
    main()
