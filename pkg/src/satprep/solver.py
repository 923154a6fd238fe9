"""CDCL search: two-watched-literal propagation, VSIDS, first-UIP learning,
Luby restarts and activity-based learned clause reduction.

:class:`Propagator` is the bare propagation engine over a :class:`Formula`.
It is reused by distillation and by :func:`fixed_by_up`; :class:`Solver`
adds the search on top.
"""

from __future__ import annotations

import enum
import heapq
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cnf import Assignment, Clause, Formula

CONFLICT = "conflict"
"""Marker returned by :func:`fixed_by_up` when propagation hits a conflict."""


class Status(str, enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"


class Propagator(Assignment):
    """Unit propagation over the non-deleted clauses of a formula.

    Watched literals are ``c.lits[0]`` and ``c.lits[1]``.  Construction
    propagates the unit clauses at level 0; :attr:`root_conflict` records
    whether that already failed.
    """

    def __init__(self, formula: Formula):
        super().__init__(formula.num_vars)
        self.formula = formula
        self.watches: list[list[Clause]] = [[] for _ in range(2 * formula.num_vars + 2)]
        self.qhead = 0
        self.propagations = 0
        self.root_conflict = formula.unsat
        for c in formula.active():
            if not self.attach(c):
                self.root_conflict = True
        if not self.root_conflict and self.propagate() is not None:
            self.root_conflict = True

    def attach(self, c: Clause) -> bool:
        """Watch ``c``; only valid at decision level 0.  False on a root conflict."""
        lits = c.lits
        if not lits:
            return False
        values = self.values
        if len(lits) == 1:
            val = values[lits[0]]
            if val == 0:
                self.assign(lits[0], c)
            return val != -1
        if values[lits[0]] == -1 or values[lits[1]] == -1:
            lits.sort(key=lambda l: -values[l])
        self.watches[lits[0]].append(c)
        self.watches[lits[1]].append(c)
        if values[lits[0]] == -1:
            return False
        if values[lits[1]] == -1 and values[lits[0]] == 0:
            self.assign(lits[0], c)
        return True

    def detach(self, c: Clause) -> None:
        if len(c.lits) >= 2:
            self.watches[c.lits[0]].remove(c)
            self.watches[c.lits[1]].remove(c)

    def propagate(self) -> Clause | None:
        trail = self.trail
        values = self.values
        watches = self.watches
        while self.qhead < len(trail):
            false_lit = trail[self.qhead] ^ 1
            self.qhead += 1
            self.propagations += 1
            ws = watches[false_lit]
            n = len(ws)
            i = j = 0
            while i < n:
                c = ws[i]
                i += 1
                if c.deleted:
                    continue
                lits = c.lits
                if lits[0] == false_lit:
                    lits[0] = lits[1]
                    lits[1] = false_lit
                first = lits[0]
                if values[first] == 1:
                    ws[j] = c
                    j += 1
                    continue
                for k in range(2, len(lits)):
                    if values[lits[k]] != -1:
                        lits[1] = lits[k]
                        lits[k] = false_lit
                        watches[lits[1]].append(c)
                        break
                else:
                    ws[j] = c
                    j += 1
                    if values[first] == -1:
                        while i < n:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        del ws[j:]
                        self.qhead = len(trail)
                        return c
                    self.assign(first, c)
            del ws[j:]
        return None

    def backtrack(self, level: int) -> list[int]:
        undone = self.undo_to(level)
        self.qhead = min(self.qhead, len(self.trail))
        return undone


def fixed_by_up(f: Formula, assumptions: Iterable[int]):
    """Variable fixings unit propagation derives from ``f`` under ``assumptions``.

    Returns a frozenset of ``(var, value)`` pairs, excluding the assumed
    literals themselves, or :data:`CONFLICT`.
    """
    p = Propagator(f)
    if p.root_conflict:
        return CONFLICT
    assumed = set()
    for a in assumptions:
        assumed.add(a)
        val = p.values[a]
        if val == -1:
            return CONFLICT
        if val == 0:
            p.assign(a)
            if p.propagate() is not None:
                return CONFLICT
    return frozenset((l >> 1, not l & 1) for l in p.trail if l not in assumed)


@dataclass
class SolverStats:
    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0
    restarts: int = 0
    learned: int = 0
    reductions: int = 0
    inprocess_calls: int = 0
    runtime: float = 0.0


@dataclass
class SolveResult:
    status: Status
    model: dict[int, bool] | None = None
    stats: SolverStats = field(default_factory=SolverStats)


@dataclass
class SolverConfig:
    var_decay: float = 0.95
    clause_decay: float = 0.999
    restart_base: int = 100
    learnt_factor: float = 1 / 3
    learnt_growth: float = 1.1
    min_learnts: int = 2000
    time_check_interval: int = 1024


def luby(i: int) -> int:
    """The i-th element (0-based) of the Luby sequence 1,1,2,1,1,2,4,..."""
    size, seq = 1, 0
    while size < i + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != i:
        size = (size - 1) >> 1
        seq -= 1
        i %= size
    return 1 << seq


InprocessHook = Callable[["Solver"], bool]


class Solver(Propagator):
    """CDCL solver owning ``formula``; learned clauses are stored in it as redundant."""

    def __init__(self, formula: Formula, config: SolverConfig | None = None):
        self.config = config or SolverConfig()
        n = formula.num_vars
        self.activity = [0.0] * (n + 1)
        self.var_inc = 1.0
        self.cla_inc = 1.0
        self.phase = [False] * (n + 1)
        self.seen = [False] * (n + 1)
        self.heap: list[tuple[float, int]] = [(-0.0, v) for v in range(1, n + 1)]
        self.stats = SolverStats()
        self.learned_log: list[list[int]] | None = None
        super().__init__(formula)
        self.num_learnts = formula.num_clauses(True)

    # -- (re)loading --------------------------------------------------------

    def reload(self) -> None:
        """Rebuild watches and the level-0 trail after the formula was rewritten."""
        n = self.formula.num_vars
        Assignment.__init__(self, n)
        self.watches = [[] for _ in range(2 * n + 2)]
        self.qhead = 0
        self.root_conflict = self.formula.unsat
        for c in self.formula.active():
            if not self.attach(c):
                self.root_conflict = True
        if not self.root_conflict and self.propagate() is not None:
            self.root_conflict = True
        self.heap = [(-self.activity[v], v) for v in range(1, n + 1)]
        heapq.heapify(self.heap)
        self.num_learnts = self.formula.num_clauses(True)

    def export_units(self) -> int:
        """Add level-0 trail literals as unit clauses; must be at level 0."""
        assert self.decision_level == 0
        fixed = self.formula.fixed_literals()
        added = 0
        for l in self.trail:
            if l not in fixed:
                self.formula.add_clause([l])
                added += 1
        return added

    # -- VSIDS --------------------------------------------------------------

    def bump_var(self, v: int) -> None:
        act = self.activity
        act[v] += self.var_inc
        if act[v] > 1e100:
            for i in range(len(act)):
                act[i] *= 1e-100
            self.var_inc *= 1e-100
            self.heap = [(-act[u], u) for u in range(1, len(act)) if self.values[2 * u] == 0]
            heapq.heapify(self.heap)
        elif self.values[2 * v] == 0:
            heapq.heappush(self.heap, (-act[v], v))

    def bump_clause(self, c: Clause) -> None:
        c.activity += self.cla_inc
        if c.activity > 1e20:
            for d in self.formula.active(True):
                d.activity *= 1e-20
            self.cla_inc *= 1e-20

    def pick_branch(self) -> int | None:
        heap, act, values = self.heap, self.activity, self.values
        while heap:
            a, v = heapq.heappop(heap)
            if values[2 * v] == 0 and -a == act[v]:
                return 2 * v + (0 if self.phase[v] else 1)
        # stale entries exhausted: fall back to a scan (ties -> lowest index)
        best = None
        for v in range(1, self.num_vars + 1):
            if values[2 * v] == 0 and (best is None or act[v] > act[best]):
                best = v
        if best is None:
            return None
        return 2 * best + (0 if self.phase[best] else 1)

    def backtrack(self, level: int) -> list[int]:
        undone = super().backtrack(level)
        act, heap = self.activity, self.heap
        for l in undone:
            v = l >> 1
            self.phase[v] = not l & 1
            heapq.heappush(heap, (-act[v], v))
        if len(heap) > 8 * self.num_vars + 64:
            self.heap = [(-act[v], v) for v in range(1, self.num_vars + 1)
                         if self.values[2 * v] == 0]
            heapq.heapify(self.heap)
        return undone

    # -- learning -----------------------------------------------------------

    def analyze(self, confl: Clause) -> tuple[list[int], int]:
        """First-UIP conflict analysis; returns (learned clause, backjump level).

        The asserting literal is first; the literal of the backjump level second.
        """
        seen, level = self.seen, self.level
        current = self.decision_level
        learnt: list[int] = [0]
        counter = 0
        p = None
        idx = len(self.trail) - 1
        while True:
            if confl.redundant:
                self.bump_clause(confl)
            for q in (confl.lits if p is None else confl.lits[1:]):
                v = q >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = True
                    self.bump_var(v)
                    if level[v] >= current:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[self.trail[idx] >> 1]:
                idx -= 1
            p = self.trail[idx]
            idx -= 1
            seen[p >> 1] = False
            counter -= 1
            if counter == 0:
                break
            confl = self.reason[p >> 1]
        learnt[0] = p ^ 1
        for q in learnt[1:]:
            seen[q >> 1] = False
        if len(learnt) == 1:
            return learnt, 0
        best = max(range(1, len(learnt)), key=lambda i: level[learnt[i] >> 1])
        learnt[1], learnt[best] = learnt[best], learnt[1]
        return learnt, level[learnt[1] >> 1]

    def _learn(self, learnt: list[int]) -> None:
        self.stats.learned += 1
        if self.learned_log is not None:
            self.learned_log.append(list(learnt))
        if len(learnt) == 1:
            self.assign(learnt[0])
            return
        c = self.formula.add_clause(learnt, redundant=True, activity=self.cla_inc)
        self.num_learnts += 1
        self.watches[learnt[0]].append(c)
        self.watches[learnt[1]].append(c)
        self.assign(learnt[0], c)

    def _locked(self, c: Clause) -> bool:
        l = c.lits[0]
        return self.values[l] == 1 and self.reason[l >> 1] is c

    def reduce_db(self) -> None:
        learnts = [c for c in self.formula.active(True) if len(c.lits) > 2 and not self._locked(c)]
        learnts.sort(key=lambda c: c.activity)
        for c in learnts[: len(learnts) // 2]:
            self.formula.remove_clause(c)
        self.formula.compact()
        self.num_learnts = self.formula.num_clauses(True)
        self.stats.reductions += 1

    # -- search -------------------------------------------------------------

    def solve(self, max_conflicts: int | None = None, max_seconds: float | None = None,
              inprocess: InprocessHook | None = None) -> SolveResult:
        start = time.monotonic()
        deadline = None if max_seconds is None else start + max_seconds
        stats = self.stats
        cfg = self.config

        def finish(status, model=None):
            stats.runtime = time.monotonic() - start
            stats.propagations = self.propagations
            return SolveResult(status, model, stats)

        if self.root_conflict:
            return finish(Status.UNSAT)
        self.backtrack(0)
        if self.propagate() is not None:
            return finish(Status.UNSAT)

        # the search start counts as the first restart boundary
        if inprocess is not None and self._run_hook(inprocess):
            if self.root_conflict:
                return finish(Status.UNSAT)

        restart_limit = cfg.restart_base * luby(0)
        conflicts_since_restart = 0
        max_learnts = max(cfg.min_learnts, self.formula.num_clauses(False) * cfg.learnt_factor)
        next_time_check = self.propagations + cfg.time_check_interval

        while True:
            confl = self.propagate()
            if confl is not None:
                if max_conflicts is not None and stats.conflicts >= max_conflicts:
                    return finish(Status.UNKNOWN)
                stats.conflicts += 1
                conflicts_since_restart += 1
                if self.decision_level == 0:
                    self.formula.add_clause([])
                    return finish(Status.UNSAT)
                learnt, bt = self.analyze(confl)
                self.backtrack(bt)
                self._learn(learnt)
                self.var_inc /= cfg.var_decay
                self.cla_inc /= cfg.clause_decay
                continue

            if deadline is not None and self.propagations >= next_time_check:
                next_time_check = self.propagations + cfg.time_check_interval
                if time.monotonic() >= deadline:
                    return finish(Status.UNKNOWN)

            if conflicts_since_restart >= restart_limit:
                stats.restarts += 1
                conflicts_since_restart = 0
                restart_limit = cfg.restart_base * luby(stats.restarts)
                self.backtrack(0)
                if inprocess is not None and self._run_hook(inprocess):
                    if self.root_conflict:
                        return finish(Status.UNSAT)
                    max_learnts = max(max_learnts, self.formula.num_clauses(False) * cfg.learnt_factor)
                continue

            if self.num_learnts - len(self.trail) >= max_learnts:
                self.reduce_db()
                max_learnts *= cfg.learnt_growth

            decision = self.pick_branch()
            if decision is None:
                model = self.model()
                return finish(Status.SAT, model)
            stats.decisions += 1
            self.new_level()
            self.assign(decision)

    def _run_hook(self, hook: InprocessHook) -> bool:
        if not hook(self):
            return False
        self.stats.inprocess_calls += 1
        self.reload()
        if not self.root_conflict:
            self.root_conflict = self.propagate() is not None
        return True


def solve(f: Formula, max_conflicts: int | None = None, max_seconds: float | None = None,
          inprocess: InprocessHook | None = None, config: SolverConfig | None = None) -> SolveResult:
    return Solver(f, config).solve(max_conflicts, max_seconds, inprocess)


def satisfies(f: Formula, model: dict[int, bool]) -> bool:
    """Does ``model`` satisfy every non-deleted clause of ``f``?"""
    for c in f.active():
        if not any(model.get(l >> 1, False) != bool(l & 1) for l in c.lits):
            return False
    return True
