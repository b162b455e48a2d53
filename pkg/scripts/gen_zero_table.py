#!/usr/bin/env python3
"""Regenerate the bundled table of Riemann zeta zero ordinates.

Computes the imaginary parts of the first N nontrivial zeros with mpmath
at 25 significant digits and writes them, 15 decimals each, to
src/szeta/data/zeros2000.txt.  This is a maintenance script; the table it
produces is checked in so normal installs never run it.
"""

import argparse
import multiprocessing as mp
import os

import mpmath


def ordinate(k: int) -> str:
    mpmath.mp.dps = 25
    gamma = mpmath.zetazero(k).imag
    return mpmath.nstr(gamma, 16, strip_zeros=False)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument(
        "--out",
        default=os.path.join(
            os.path.dirname(__file__), "..", "src", "szeta", "data", "zeros2000.txt"
        ),
    )
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = ap.parse_args()

    with mp.Pool(args.jobs) as pool:
        vals = pool.map(ordinate, range(1, args.count + 1), chunksize=25)

    with open(args.out, "w") as fh:
        fh.write("# imaginary parts of the first %d nontrivial zeros of zeta\n" % args.count)
        fh.write("# computed with mpmath (dps=25), truncated to 15 decimals\n")
        for v in vals:
            fh.write(v + "\n")
    print("wrote %d ordinates to %s" % (len(vals), args.out))


if __name__ == "__main__":
    main()
