"""Effect of boundary grid refinement R.

Prints the error against R for a high-frequency plane wave, then the M needed
to reach 1e-10 on sin(1500 t^2) for each R.
"""

import argparse

from bife.experiments import boundary_error_fn, search_resolution
from bife.pipeline import approximation_error
from bife.special import get_function


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--omega", type=float, default=300.0)
    p.add_argument("--M", type=int, default=500)
    p.add_argument("--Rs", default="1,2,3,4,5,6")
    p.add_argument("--delta", type=float, default=1e-10)
    args = p.parse_args()
    Rs = [int(v) for v in args.Rs.split(",")]

    w = get_function("plane_wave", args.omega)
    print("R,max_error")
    for R in Rs:
        print(f"{R},{approximation_error(w, args.M, R=R)!r}", flush=True)

    f12 = get_function("f12")
    print("\nR,M_for_delta")
    for R in Rs:
        try:
            M = search_resolution(boundary_error_fn(f12, R=R), args.delta, 100, 20000)
        except LookupError:
            M = "none"
        print(f"{R},{M}", flush=True)


if __name__ == "__main__":
    main()
