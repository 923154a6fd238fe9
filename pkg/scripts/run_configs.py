"""Run the standard configurations on a suite and write records, cactus and summary files.

    python scripts/run_configs.py out/suite/manifest.txt --timeout 10 --out out/configs
"""

import argparse
import time
from pathlib import Path

from satprep import bench

CONFIGS = [
    "reference",
    "SUB", "RSUB", "BVE", "BCE", "UH", "DI",
    "BCE+UH", "BCE+BVE", "BCE+BVE+UH",
    "-:UH", "-:DI", "-:UH+DI",
    "BCE+BVE+UH:UH+DI",
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("manifest")
    ap.add_argument("--timeout", type=float, default=600.0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="configs")
    ap.add_argument("--config", action="append", help="override the default configuration list")
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    instances = bench.read_manifest(args.manifest)
    configs = [bench.BenchConfig.parse(c) for c in (args.config or CONFIGS)]
    t = time.monotonic()
    records = bench.run_suite(instances, configs, args.timeout, jobs=args.jobs, seed=args.seed)
    (out / "records.csv").write_text(bench.emit_records_csv(records))
    (out / "cactus.csv").write_text(bench.emit_cactus_csv(records, args.timeout))
    summary = bench.format_summary(bench.summarize(records))
    (out / "summary.txt").write_text(summary + "\n")
    print(summary)
    print(f"\n{len(instances)} instances x {len(configs)} configs in {time.monotonic() - t:.1f} s")


if __name__ == "__main__":
    main()
