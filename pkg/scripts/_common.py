"""Small shared helpers for the experiment scripts."""

import csv
import sys


def write_rows(rows, header, path=None):
    fh = open(path, "w", newline="") if path else sys.stdout
    try:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
    finally:
        if path:
            fh.close()
