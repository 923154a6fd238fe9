"""Generate a local benchmark suite (and optionally permuted variants of each instance).

    python scripts/make_suite.py out/suite --count 30 --seed 0 --variants 5
"""

import argparse
from pathlib import Path

from satprep.dimacs import permuted_variants, read_dimacs, write_dimacs
from satprep.generate import write_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("directory")
    ap.add_argument("--count", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--hard", type=int, default=2, help="instances near the phase transition")
    ap.add_argument("--variants", type=int, default=0, help="permuted copies per instance")
    args = ap.parse_args()

    paths = write_suite(args.directory, args.count, args.seed, args.hard)
    if args.variants:
        out = Path(args.directory)
        names = []
        for p in paths:
            for i, g in enumerate(permuted_variants(read_dimacs(p), args.variants, args.seed), 1):
                q = out / f"{p.stem}.perm{i}.cnf"
                q.write_text(write_dimacs(g))
                names.append(q.name)
        (out / "manifest.txt").write_text("".join(f"{n}\n" for n in names))
    print(f"wrote {len(paths) * max(1, args.variants)} instances to {args.directory}")


if __name__ == "__main__":
    main()
