"""Named pass configurations, time budgets, and pre/inprocessing scheduling."""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from typing import Callable

from .cnf import Formula
from .simplify import (
    ReconstructionStack,
    SimplifyStats,
    bce_pass,
    bve_pass,
    distill_pass,
    propagate_units,
    reconstruct_model,
    self_subsume_pass,
    subsume_pass,
    unhide_round,
)
from .solver import SolveResult, Solver, SolverConfig, Status, satisfies

PASS_NAMES = ("SUB", "RSUB", "BVE", "BCE", "UH", "DI")
OCC_LIST_PASSES = frozenset({"SUB", "RSUB", "BVE", "BCE"})
PREPROCESS = "preprocess"
INPROCESS = "inprocess"
DI_CLAUSES = 100


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class PassConfig:
    passes: tuple[str, ...]
    phase: str = PREPROCESS

    def __post_init__(self):
        if self.phase not in (PREPROCESS, INPROCESS):
            raise ConfigError(f"unknown phase {self.phase!r}")
        for p in self.passes:
            if p not in PASS_NAMES:
                raise ConfigError(f"unknown pass {p!r}")
        if self.phase == INPROCESS:
            bad = [p for p in self.passes if p in OCC_LIST_PASSES]
            if bad:
                raise ConfigError(
                    f"{'+'.join(bad)} requires literal occurrence lists and cannot be "
                    "used for inprocessing (only UH and DI can)")

    @property
    def name(self) -> str:
        return "+".join(self.passes)

    def __bool__(self) -> bool:
        return bool(self.passes)


def parse_config(text: str | None, phase: str = PREPROCESS) -> PassConfig:
    """``"BCE+BVE+UH"`` -> PassConfig(("BCE", "BVE", "UH")).  Empty or ``-`` means no passes."""
    if text is None or text.strip() in ("", "-", "none"):
        return PassConfig((), phase)
    passes = []
    for tok in text.split("+"):
        name = tok.strip().upper()
        if name not in PASS_NAMES:
            raise ConfigError(f"unknown pass {tok.strip()!r} in {text!r}")
        passes.append(name)
    return PassConfig(tuple(passes), phase)


@dataclass(frozen=True)
class BudgetPolicy:
    total_timeout: float = 600.0
    pre_fraction: float = 0.1
    in_fraction: float = 0.1
    round_var_threshold: float = 0.01
    round_time_threshold: float = 0.01
    inproc_ratio: float = 0.1

    def __post_init__(self):
        if not self.total_timeout > 0:
            raise ValueError("total_timeout must be positive")
        for name in ("pre_fraction", "in_fraction", "round_var_threshold",
                     "round_time_threshold", "inproc_ratio"):
            x = getattr(self, name)
            if not 0 < x <= 1:
                raise ValueError(f"{name} must lie in (0, 1], got {x}")

    @property
    def pre_budget(self) -> float:
        return self.pre_fraction * self.total_timeout

    @property
    def in_budget(self) -> float:
        return self.in_fraction * self.total_timeout


def should_continue_rounds(eliminated: int, remaining_at_start: int, round_time: float,
                           policy: BudgetPolicy) -> bool:
    """Another round iff > 1% of the remaining variables went in <= 1% of the timeout."""
    return (eliminated > policy.round_var_threshold * remaining_at_start
            and round_time <= policy.round_time_threshold * policy.total_timeout)


def should_run_inprocess(consumed_in_time: float, solver_runtime: float,
                         policy: BudgetPolicy) -> bool:
    if solver_runtime <= 0:
        return consumed_in_time < policy.in_budget
    return (consumed_in_time / solver_runtime < policy.inproc_ratio
            and consumed_in_time < policy.in_budget)


def run_pass(name: str, f: Formula, stack: ReconstructionStack, budget: float | None,
             seed: int = 0, di_key: Callable[[int], object] | None = None,
             di_clauses=None) -> SimplifyStats:
    if name == "SUB":
        return subsume_pass(f, budget)
    if name == "RSUB":
        return self_subsume_pass(f, budget)
    if name == "BVE":
        return bve_pass(f, stack, budget)
    if name == "BCE":
        return bce_pass(f, stack, budget)
    if name == "UH":
        return unhide_round(f, stack, seed, budget)
    if name == "DI":
        return distill_pass(f, di_clauses, di_key, budget)
    raise ConfigError(f"unknown pass {name!r}")


PassRunner = Callable[..., SimplifyStats]


def run_preprocess(f: Formula, cfg: PassConfig, policy: BudgetPolicy,
                   stack: ReconstructionStack, seed: int = 0,
                   runner: PassRunner = run_pass,
                   clock: Callable[[], float] = time.monotonic) -> SimplifyStats:
    """Run rounds of ``cfg`` while the round heuristic and the budget allow."""
    if cfg.phase != PREPROCESS:
        raise ConfigError("run_preprocess needs a preprocess config")
    total = SimplifyStats()
    start = clock()
    if not cfg:
        return total
    total.absorb(propagate_units(f))
    round_no = 0
    while not f.unsat:
        round_start = clock()
        remaining = f.remaining_vars()
        left = policy.pre_budget - (round_start - start)
        if left <= 0:
            break
        share = left / len(cfg.passes)
        for name in cfg.passes:
            pass_left = policy.pre_budget - (clock() - start)
            if pass_left <= 0 or f.unsat:
                break
            total.absorb(runner(name, f, stack, min(share, pass_left), seed=seed + round_no))
            total.absorb(propagate_units(f))
        f.compact()
        round_no += 1
        total.rounds = round_no
        now = clock()
        eliminated = remaining - f.remaining_vars()
        if now - start >= policy.pre_budget:
            break
        if not should_continue_rounds(eliminated, remaining, now - round_start, policy):
            break
    total.unsat = f.unsat
    total.time_spent = clock() - start
    return total


def top_active_clauses(solver: Solver, k: int = DI_CLAUSES, learned_only: bool = False):
    """The ``k`` most active clauses of length >= 3.

    Learned clauses use their own activity; irredundant ones the largest
    VSIDS activity among their variables.
    """
    act = solver.activity
    values = solver.values
    scored = []
    for i, c in enumerate(solver.formula.active(True if learned_only else None)):
        if len(c.lits) < 3 or any(values[l] == 1 for l in c.lits):
            continue
        score = c.activity if c.redundant else max(act[l >> 1] for l in c.lits)
        scored.append((-score, i, c))
    return [c for _, _, c in heapq.nsmallest(k, scored, key=lambda t: (t[0], t[1]))]


def run_inprocess(solver: Solver, cfg: PassConfig, policy: BudgetPolicy,
                  stack: ReconstructionStack, budget: float | None = None, seed: int = 0,
                  learned_only: bool = False) -> SimplifyStats:
    """Simplify the solver's formula at a restart boundary (decision level 0)."""
    if cfg.phase != INPROCESS:
        raise ConfigError("run_inprocess needs an inprocess config")
    if solver.decision_level != 0:
        raise RuntimeError("inprocessing must run at decision level 0")
    f = solver.formula
    b_start = time.monotonic()
    total = SimplifyStats()
    solver.export_units()
    total.absorb(propagate_units(f))
    act = solver.activity
    for name in cfg.passes:
        if f.unsat:
            break
        left = None if budget is None else budget - (time.monotonic() - b_start)
        if left is not None and left <= 0:
            break
        if name == "DI":
            clauses = top_active_clauses(solver, DI_CLAUSES, learned_only)
            total.absorb(run_pass("DI", f, stack, left, di_clauses=clauses,
                                  di_key=lambda l: (-act[l >> 1], l >> 1)))
        else:
            total.absorb(run_pass(name, f, stack, left, seed=seed))
        total.absorb(propagate_units(f))
    f.compact()
    total.unsat = f.unsat
    total.time_spent = time.monotonic() - b_start
    return total


class Inprocessor:
    """Solver hook applying the ratio rule at every restart boundary."""

    def __init__(self, cfg: PassConfig, policy: BudgetPolicy, stack: ReconstructionStack,
                 seed: int = 0, learned_only: bool = False):
        self.cfg = cfg
        self.policy = policy
        self.stack = stack
        self.seed = seed
        self.learned_only = learned_only
        self.consumed = 0.0
        self.started: float | None = None
        self.calls = 0
        self.stats = SimplifyStats()

    def __call__(self, solver: Solver) -> bool:
        now = time.monotonic()
        if self.started is None:
            self.started = now
        runtime = max(now - self.started, 1e-9)
        if not should_run_inprocess(self.consumed, runtime, self.policy):
            return False
        left = self.policy.in_budget - self.consumed
        st = run_inprocess(solver, self.cfg, self.policy, self.stack, budget=left,
                           seed=self.seed + self.calls, learned_only=self.learned_only)
        self.calls += 1
        self.consumed += st.time_spent
        self.stats.absorb(st)
        return True


@dataclass
class RunOutcome:
    status: Status
    model: dict[int, bool] | None
    vars_before: int
    vars_after: int
    clauses_before: int
    clauses_after: int
    pre_stats: SimplifyStats
    in_stats: SimplifyStats
    solve: SolveResult | None
    runtime: float
    stack: ReconstructionStack = field(repr=False, default_factory=ReconstructionStack)


class ModelCheckError(RuntimeError):
    pass


def run(f: Formula, pre: PassConfig | None = None, inproc: PassConfig | None = None,
        policy: BudgetPolicy | None = None, seed: int = 0, max_conflicts: int | None = None,
        solver_config: SolverConfig | None = None, learned_only: bool = False) -> RunOutcome:
    """Preprocess, solve (with optional inprocessing), reconstruct and verify.

    ``f`` is left untouched; a SAT model is checked against it and
    :class:`ModelCheckError` raised if the check fails.
    """
    policy = policy or BudgetPolicy()
    start = time.monotonic()
    work = f.copy()
    stack = ReconstructionStack()
    vars_before, clauses_before = f.remaining_vars(), f.remaining_clauses()
    pre_stats = SimplifyStats()
    if pre:
        pre_stats = run_preprocess(work, pre, policy, stack, seed=seed)
    vars_after, clauses_after = work.remaining_vars(), work.remaining_clauses()
    in_stats = SimplifyStats()
    result = None
    if work.unsat:
        status, model = Status.UNSAT, None
    else:
        hook = Inprocessor(inproc, policy, stack, seed, learned_only) if inproc else None
        left = policy.total_timeout - (time.monotonic() - start)
        solver = Solver(work, solver_config)
        result = solver.solve(max_conflicts, max(left, 0.0), hook)
        if hook is not None:
            in_stats = hook.stats
        status, model = result.status, None
        if status is Status.SAT:
            model = reconstruct_model(stack, result.model)
            if not satisfies(f, model):
                raise ModelCheckError("reconstructed model falsifies the original formula")
    return RunOutcome(status, model, vars_before, vars_after, clauses_before, clauses_after,
                      pre_stats, in_stats, result, time.monotonic() - start, stack)
