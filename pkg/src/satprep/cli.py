"""Command line: ``satprep {solve,simplify,permute,bench,oracle}``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import bench
from .dimacs import permuted_variants, read_dimacs, write_dimacs
from .oracle import brute_force_sat
from .pipeline import (
    INPROCESS, BudgetPolicy, ModelCheckError, parse_config, run, run_preprocess,
)
from .simplify import ReconstructionStack
from .solver import Status

EXIT_CODES = {Status.SAT: 10, Status.UNSAT: 20, Status.UNKNOWN: 0}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pre", default=None, help="preprocessing config, e.g. BCE+BVE+UH")
    p.add_argument("--in", dest="inproc", default=None, help="inprocessing config, e.g. UH+DI")
    p.add_argument("--timeout", type=float, default=600.0, help="seconds (default 600)")
    p.add_argument("--pre-frac", type=float, default=0.1)
    p.add_argument("--in-frac", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="satprep", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve a DIMACS file")
    p.add_argument("file")
    _budget_flags(p)
    p.add_argument("--conflicts", type=int, default=None, help="conflict limit")

    p = sub.add_parser("simplify", help="preprocess and write the simplified formula")
    p.add_argument("file")
    _budget_flags(p)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--stack", default=None, help="reconstruction sidecar (default OUTPUT.stack)")

    p = sub.add_parser("permute", help="write randomly permuted variants")
    p.add_argument("file")
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", default=None)
    p.add_argument("--keep-clause-order", action="store_true")
    p.add_argument("--keep-literal-order", action="store_true")
    p.add_argument("--keep-polarities", action="store_true")

    p = sub.add_parser("bench", help="run a suite manifest across configurations")
    p.add_argument("manifest")
    p.add_argument("--config", action="append", default=None,
                   help="PRE[:IN] (repeatable); 'reference' for plain CDCL")
    p.add_argument("--timeout", type=float, default=600.0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--records", default="records.csv")
    p.add_argument("--cactus", default="cactus.csv")

    p = sub.add_parser("oracle", help="brute-force satisfiability (small instances)")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=20)
    return ap


def _policy(args) -> BudgetPolicy:
    return BudgetPolicy(total_timeout=args.timeout, pre_fraction=args.pre_frac,
                        in_fraction=args.in_frac)


def print_result(status: Status, model, out=None) -> None:
    out = out or sys.stdout
    names = {Status.SAT: "SATISFIABLE", Status.UNSAT: "UNSATISFIABLE", Status.UNKNOWN: "UNKNOWN"}
    print(f"s {names[status]}", file=out)
    if status is Status.SAT:
        lits = [str(v if model[v] else -v) for v in sorted(model)] + ["0"]
        for i in range(0, len(lits), 20):
            print("v " + " ".join(lits[i:i + 20]), file=out)


def cmd_solve(args) -> int:
    f = read_dimacs(args.file)
    pre = parse_config(args.pre) if args.pre else None
    inproc = parse_config(args.inproc, INPROCESS) if args.inproc else None
    out = run(f, pre, inproc, _policy(args), seed=args.seed, max_conflicts=args.conflicts)
    print(f"c vars {out.vars_before} -> {out.vars_after}, clauses "
          f"{out.clauses_before} -> {out.clauses_after}, {out.runtime:.3f} s")
    if out.solve is not None:
        st = out.solve.stats
        print(f"c conflicts {st.conflicts} decisions {st.decisions} "
              f"propagations {st.propagations} inprocessing {st.inprocess_calls}")
    print_result(out.status, out.model)
    return EXIT_CODES[out.status]


def cmd_simplify(args) -> int:
    f = read_dimacs(args.file)
    stack = ReconstructionStack()
    pre = parse_config(args.pre)
    stats = run_preprocess(f, pre, _policy(args), stack, seed=args.seed)
    Path(args.output).write_text(write_dimacs(f))
    Path(args.stack or args.output + ".stack").write_text(stack.dumps())
    print(f"c rounds {stats.rounds} eliminated {stats.vars_eliminated} vars, "
          f"removed {stats.clauses_removed} clauses, added {stats.clauses_added}"
          + (" (UNSAT)" if f.unsat else ""))
    return 0


def cmd_permute(args) -> int:
    f = read_dimacs(args.file)
    src = Path(args.file)
    out_dir = Path(args.out_dir) if args.out_dir else src.parent
    out_dir.mkdir(parents=True, exist_ok=True)
    variants = permuted_variants(f, args.count, args.seed,
                                 permute_clause_order=not args.keep_clause_order,
                                 permute_literal_order=not args.keep_literal_order,
                                 flip_polarities=not args.keep_polarities)
    stem = src.name[:-4] if src.name.endswith(".cnf") else src.name
    for i, g in enumerate(variants, 1):
        path = out_dir / f"{stem}.perm{i}.cnf"
        path.write_text(write_dimacs(g))
        print(path)
    return 0


def cmd_bench(args) -> int:
    instances = bench.read_manifest(args.manifest)
    configs = [bench.BenchConfig.parse(c) for c in (args.config or ["reference"])]
    records = bench.run_suite(instances, configs, args.timeout, jobs=args.jobs, seed=args.seed)
    Path(args.records).write_text(bench.emit_records_csv(records))
    Path(args.cactus).write_text(bench.emit_cactus_csv(records, args.timeout))
    print(bench.format_summary(bench.summarize(records)))
    return 0


def cmd_oracle(args) -> int:
    f = read_dimacs(args.file)
    sat, model = brute_force_sat(f, cap=args.cap)
    status = Status.SAT if sat else Status.UNSAT
    print_result(status, model)
    return EXIT_CODES[status]


COMMANDS = {"solve": cmd_solve, "simplify": cmd_simplify, "permute": cmd_permute,
            "bench": cmd_bench, "oracle": cmd_oracle}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="c %(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OSError) as e:  # ConfigError, DimacsError, OracleCapExceeded, bad fractions
        print(f"satprep: {e}", file=sys.stderr)
        return 1
    except ModelCheckError as e:
        print(f"c ERROR {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
