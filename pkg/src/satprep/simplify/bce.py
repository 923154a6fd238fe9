from __future__ import annotations

import random
from collections import deque

from ..cnf import Clause, Formula
from .stack import ReconstructionStack
from .stats import Budget, SimplifyStats


def is_blocked_on(f: Formula, c: Clause, l: int) -> bool:
    """Every resolvent of ``c`` on ``l`` with an irredundant clause is a tautology."""
    cset = set(c.lits)
    for d in f.occ[l ^ 1]:
        if d.deleted or d.redundant:
            continue
        if not any(k ^ 1 in cset for k in d.lits if k != l ^ 1):
            return False
    return True


def bce_pass(f: Formula, stack: ReconstructionStack, budget: float | None = None,
             seed: int | None = None) -> SimplifyStats:
    """Remove blocked irredundant clauses (length >= 2) until fixpoint.

    ``seed`` shuffles the processing order; the fixpoint does not depend on it.
    Each removed clause goes on ``stack`` with its blocking literal as witness.
    """
    stats = SimplifyStats()
    b = Budget(budget)
    rng = random.Random(seed) if seed is not None else None
    lits = [l for l in range(2, 2 * f.num_vars + 2) if f.occ[l]]
    if rng:
        rng.shuffle(lits)
    queue = deque(lits)
    queued = set(lits)
    while queue and not f.unsat:
        if b.expired():
            break
        l = queue.popleft()
        queued.discard(l)
        cands = [c for c in f.occ[l] if not c.deleted and not c.redundant and len(c.lits) >= 2]
        if rng:
            rng.shuffle(cands)
        for c in cands:
            if c.deleted or not is_blocked_on(f, c, l):
                continue
            stack.push_clause(c.lits, l)
            f.remove_clause(c)
            stats.clauses_removed += 1
            for m in c.lits:
                # clauses blocked on -m only had to clash with c, which is gone
                if m ^ 1 not in queued:
                    queue.append(m ^ 1)
                    queued.add(m ^ 1)
    stats.time_spent = b.elapsed()
    stats.unsat = f.unsat
    return stats
