"""Benchmark harness: suite runs, solved and delta summaries, cactus CSV."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .dimacs import read_dimacs
from .pipeline import INPROCESS, BudgetPolicy, parse_config, run

RECORD_FIELDS = ["instance", "config", "status", "runtime_s", "delta_vars_pct", "delta_cls_pct", "seed"]
CACTUS_FIELDS = ["config", "index", "runtime_s"]
ERROR = "ERROR"
SOLVED = ("SAT", "UNSAT")


@dataclass(frozen=True)
class BenchConfig:
    """A (preprocess, inprocess) pair written ``PRE:IN``; ``-`` or empty for none."""

    pre: str = ""
    inproc: str = ""

    @classmethod
    def parse(cls, text: str) -> "BenchConfig":
        text = text.strip()
        if text.lower() in ("reference", "ref"):
            return cls()
        pre, _, inproc = text.partition(":")
        pre = "" if pre.strip() in ("", "-") else parse_config(pre).name
        inproc = "" if inproc.strip() in ("", "-") else parse_config(inproc, INPROCESS).name
        return cls(pre, inproc)

    @property
    def name(self) -> str:
        if not self.pre and not self.inproc:
            return "reference"
        return (self.pre or "-") + (f":{self.inproc}" if self.inproc else "")


@dataclass(frozen=True)
class RunRecord:
    instance: str
    config: str
    status: str
    runtime: float
    delta_vars_pct: float | None
    delta_cls_pct: float | None
    seed: int

    @property
    def solved(self) -> bool:
        return self.status in SOLVED

    def row(self) -> list[str]:
        def pct(x):
            return "" if x is None else repr(float(x))
        return [self.instance, self.config, self.status, repr(float(self.runtime)),
                pct(self.delta_vars_pct), pct(self.delta_cls_pct), str(self.seed)]

    @classmethod
    def from_row(cls, row: dict) -> "RunRecord":
        def pct(x):
            return None if x in ("", None) else float(x)
        return cls(row["instance"], row["config"], row["status"], float(row["runtime_s"]),
                   pct(row["delta_vars_pct"]), pct(row["delta_cls_pct"]), int(row["seed"]))


def delta_pct(before: int, after: int) -> float | None:
    """100 * (after - before) / before, or ``None`` when ``before`` is 0."""
    if before == 0:
        return None
    return 100.0 * (after - before) / before


def run_instance(path: str, config: BenchConfig, timeout: float, seed: int = 0,
                 policy: BudgetPolicy | None = None) -> RunRecord:
    try:
        f = read_dimacs(path)
    except (OSError, ValueError):
        return RunRecord(str(path), config.name, ERROR, 0.0, None, None, seed)
    policy = policy or BudgetPolicy(total_timeout=timeout)
    pre = parse_config(config.pre) if config.pre else None
    inproc = parse_config(config.inproc, INPROCESS) if config.inproc else None
    out = run(f, pre, inproc, policy, seed=seed)
    dv = dc = None
    if pre:
        dv = delta_pct(out.vars_before, out.vars_after)
        dc = delta_pct(out.clauses_before, out.clauses_after)
    return RunRecord(str(path), config.name, out.status.value, out.runtime, dv, dc, seed)


def _run_job(args):
    return run_instance(*args)


def run_suite(instances: Sequence[str], configs: Sequence[BenchConfig], timeout: float,
              jobs: int = 1, seed: int = 0) -> list[RunRecord]:
    """One record per (instance, config), in instance-major order."""
    tasks = [(str(p), c, timeout, seed) for p in instances for c in configs]
    if jobs <= 1:
        return [_run_job(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_job, tasks))


def read_manifest(path) -> list[str]:
    base = Path(path).parent
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            p = Path(line)
            out.append(str(p if p.is_absolute() else base / p))
    return out


def _mean(xs: Iterable[float | None]) -> float | None:
    vals = [x for x in xs if x is not None]
    return math.fsum(vals) / len(vals) if vals else None


def delta_stats(records: Sequence[RunRecord], config: str) -> tuple[float | None, float | None]:
    """Mean per-instance (delta vars %, delta clauses %) for ``config``."""
    rs = [r for r in records if r.config == config]
    if not rs:
        raise ValueError(f"no records for config {config!r}")
    return _mean(r.delta_vars_pct for r in rs), _mean(r.delta_cls_pct for r in rs)


def config_order(records: Sequence[RunRecord]) -> list[str]:
    return list(dict.fromkeys(r.config for r in records))


def summarize(records: Sequence[RunRecord]) -> list[dict]:
    """Per config: solved count plus mean delta vars/clauses."""
    out = []
    for name in config_order(records):
        dv, dc = delta_stats(records, name)
        rs = [r for r in records if r.config == name]
        out.append({"config": name, "instances": len(rs), "solved": sum(r.solved for r in rs),
                    "delta_vars_pct": dv, "delta_cls_pct": dc})
    return out


def format_summary(rows: Sequence[dict]) -> str:
    def pct(x):
        return "--" if x is None else f"{x:+.2f}"
    lines = [f"{'configuration':<24}{'solved':>8}{'dvars[%]':>12}{'dcls[%]':>12}"]
    for r in rows:
        lines.append(f"{r['config']:<24}{r['solved']:>8}{pct(r['delta_vars_pct']):>12}"
                     f"{pct(r['delta_cls_pct']):>12}")
    return "\n".join(lines)


def cactus_series(records: Sequence[RunRecord], timeout: float) -> dict[str, list[float]]:
    """Per config, runtimes ascending with unsolved runs counted at ``timeout``."""
    return {name: sorted(r.runtime if r.solved else timeout
                         for r in records if r.config == name)
            for name in config_order(records)}


def emit_cactus_csv(records: Sequence[RunRecord], timeout: float = 600.0) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CACTUS_FIELDS)
    for name, times in cactus_series(records, timeout).items():
        for i, t in enumerate(times, 1):
            w.writerow([name, i, f"{t:.6f}"])
    return buf.getvalue()


def emit_records_csv(records: Sequence[RunRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RECORD_FIELDS)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


def parse_records_csv(text: str) -> list[RunRecord]:
    return [RunRecord.from_row(row) for row in csv.DictReader(io.StringIO(text))]

