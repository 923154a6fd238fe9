"""Differential check of every configuration against the brute-force oracle.

    python scripts/oracle_sweep.py --formulas 2000 --seed 1
"""

import argparse
import random
import time

from satprep.cnf import Formula
from satprep.generate import random_mixed_cnf
from satprep.oracle import brute_force_sat
from satprep.pipeline import INPROCESS, parse_config, run
from satprep.solver import Status, satisfies

CONFIGS = ["SUB", "RSUB", "BVE", "BCE", "UH", "DI", "BCE+UH", "BCE+BVE", "BCE+BVE+UH", ":UH+DI"]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--formulas", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-vars", type=int, default=12)
    args = ap.parse_args()

    cfgs = []
    for c in CONFIGS:
        pre, _, inproc = c.partition(":")
        cfgs.append((c, parse_config(pre) if pre else None,
                     parse_config(inproc, INPROCESS) if inproc else None))
    rng = random.Random(args.seed)
    failures = 0
    t = time.monotonic()
    for k in range(args.formulas):
        n, clauses = random_mixed_cnf(rng, max_vars=args.max_vars)
        f = Formula.from_clauses(clauses, n)
        expected = brute_force_sat(f)[0]
        for name, pre, inproc in cfgs:
            out = run(f, pre, inproc, seed=k)
            ok = (out.status is Status.SAT) == expected and out.status is not Status.UNKNOWN
            if ok and out.model is not None:
                ok = satisfies(f, out.model)
            if not ok:
                failures += 1
                print(f"FAIL {name}: n={n} clauses={clauses}")
    print(f"{args.formulas} formulas x {len(cfgs)} configs: {failures} failures "
          f"in {time.monotonic() - t:.1f} s")


if __name__ == "__main__":
    main()
