"""Run the seeded axiom suites at full size and print one line per axiom.

    python3 scripts/run_axioms.py                 # every model/family pairing
    python3 scripts/run_axioms.py --models real interval --trials 2000
"""

import argparse
import time

from pointfree.axioms import check_axioms
from pointfree.models import parse_model

PLAN = {
    "real": ["CA", "LCA", "LL"],
    "interval": ["CA", "NCA", "LL"],
    "circle": ["CA", "NCA", "LL"],
    "real:2": ["CA", "LCA", "LL"],
    "torus:2": ["CA", "NCA", "LL"],
    "cube:2": ["CA", "NCA", "LL"],
    "alex(real)": ["CA", "NCA", "LL"],
    "rel(real, cone(1))": ["CA", "NCA", "LL"],
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--models", nargs="*", default=list(PLAN))
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--existential-trials", type=int, default=1_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    bad = 0
    for name in args.models:
        model = parse_model(name)
        for fam in PLAN.get(name, ["CA"]):
            t0 = time.perf_counter()
            reports = check_axioms(model, fam, args.trials, args.seed, args.existential_trials)
            dt = time.perf_counter() - t0
            for r in reports:
                print(r.summary())
                bad += not r.passed
            print(f"  {name} {fam}: {dt:.1f}s")
    print("all pass" if not bad else f"{bad} failing axioms")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
