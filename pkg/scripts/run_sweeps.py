"""Run every exhaustive equivalence sweep at its full bounds."""

import argparse
import time

from pointfree.sweeps import Bounds, check_equivalences

SWEEPS = ["formula-real", "formula-interval", "presentation", "circle", "relative", "product"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("which", nargs="*", default=SWEEPS)
    ap.add_argument("--depth", type=int, default=3)
    ap.add_argument("--entry", type=int, default=4)
    ap.add_argument("--r", type=int, default=4)
    args = ap.parse_args()
    bad = 0
    for which in args.which:
        t0 = time.perf_counter()
        rep = check_equivalences(which, Bounds(args.depth, args.entry, args.r))
        print(f"{rep.summary()}  ({time.perf_counter() - t0:.1f}s)")
        for m in rep.mismatches[:10]:
            print("    ", m)
        bad += not rep.passed
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
