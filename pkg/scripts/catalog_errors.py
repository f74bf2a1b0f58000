"""Boundary method and full-data baseline on every catalog function.

For each function: the error at a few M, and the M each method needs for
1e-10 (baseline capped at M = 998).
"""

import argparse

from bife.baseline import FullDataConfig
from bife.experiments import boundary_error_fn, fulldata_error_fn, search_resolution
from bife.special import CATALOG_NAMES, get_function


def _resolve(err, hi):
    try:
        return str(search_resolution(err, 1e-10, 20, hi))
    except LookupError:
        return f">{hi}"


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--Ms", default="100,200,500")
    p.add_argument("--no-resolution", action="store_true")
    args = p.parse_args()
    Ms = [int(v) for v in args.Ms.split(",")]

    print("function," + ",".join(f"err_M{M}" for M in Ms) + ",M_boundary,M_fulldata")
    for name in CATALOG_NAMES:
        if name == "plane_wave":
            continue
        f = get_function(name)
        err = boundary_error_fn(f)
        cells = [f"{err(M):.2e}" for M in Ms]
        if args.no_resolution:
            cells += ["", ""]
        else:
            cells += [_resolve(err, 20000), _resolve(fulldata_error_fn(f, FullDataConfig()), 998)]
        print(name + "," + ",".join(cells), flush=True)


if __name__ == "__main__":
    main()
