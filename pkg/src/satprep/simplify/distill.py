"""Distillation: assume a clause's literals false one by one, propagating after each.

With C = (l1 | ... | lk) detached from the formula and the literals visited
in the given order:

* a conflict after assuming -l1 .. -li replaces C by (l1 | ... | li);
* a literal already true under propagation means C is implied.  If the
  clause that propagated it is a subset of C, C is simply subsumed and
  removed; otherwise C is replaced by the assumed prefix plus that literal;
* a literal already false is dropped from C.

Every outcome leaves a subset of C (or removes a subsumed C), so models and
unit propagation are both preserved.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from ..cnf import Clause, Formula
from ..solver import Propagator
from .stats import Budget, SimplifyStats

UNCHANGED = "unchanged"
STRENGTHENED = "strengthened"
REPLACED = "replaced"
REMOVED = "removed"


def distill_clause(f: Formula, c: Clause, order: Sequence[int] | None = None,
                   budget: float | None = None, probe: Propagator | None = None) -> str:
    """Distill one clause; ``probe`` must be a level-0 propagator over ``f``."""
    p = probe if probe is not None else Propagator(f)
    if p.root_conflict or c.deleted:
        return UNCHANGED
    if len(c.lits) < 3 or any(p.values[l] == 1 for l in c.lits):
        return UNCHANGED
    order = list(c.lits) if order is None else list(order)
    if sorted(order) != sorted(c.lits):
        raise ValueError("order must be a permutation of the clause literals")
    b = Budget(budget)
    cset = set(c.lits)
    p.detach(c)
    assumed: list[int] = []
    dropped: list[int] = []
    keep: list[int] | None = None
    subsumed_by: Clause | None = None
    p.new_level()
    for l in order:
        val = p.values[l]
        if val == 1:
            reason = p.reason[l >> 1]
            if reason is not None and cset.issuperset(reason.lits):
                subsumed_by = reason
            else:
                keep = assumed + [l]
            break
        if val == -1:
            dropped.append(l)
            continue
        assumed.append(l)
        p.assign(l ^ 1)
        if p.propagate() is not None:
            keep = list(assumed)
            break
        if b.expired():
            break
    p.backtrack(0)

    if subsumed_by is not None:
        if subsumed_by.redundant and not c.redundant:
            subsumed_by.redundant = False
        f.remove_clause(c)
        return REMOVED
    if keep is not None:
        target = set(keep)
        outcome = REPLACED
    else:
        target = cset - set(dropped)
        outcome = STRENGTHENED if dropped else UNCHANGED
    for l in [l for l in c.lits if l not in target]:
        f.strengthen(c, l)
    if len(c.lits) == len(cset):
        outcome = UNCHANGED
    if not p.attach(c) or p.propagate() is not None:
        p.root_conflict = True
        if not f.unsat:
            f.add_clause([])
    return outcome


def distill_pass(f: Formula, clauses: Iterable[Clause] | None = None,
                 key: Callable[[int], object] | None = None,
                 budget: float | None = None) -> SimplifyStats:
    """Distill ``clauses`` (default: every irredundant clause of length >= 3).

    ``key`` orders each clause's literals (``sorted(lits, key=key)``); without
    it the stored order is used.
    """
    stats = SimplifyStats()
    b = Budget(budget)
    p = Propagator(f)
    if p.root_conflict:
        if not f.unsat:
            f.add_clause([])
        stats.unsat = True
        return stats
    if clauses is None:
        clauses = [c for c in f.active(False) if len(c.lits) >= 3]
    for c in list(clauses):
        if b.expired() or p.root_conflict:
            break
        if c.deleted:
            continue
        before = len(c.lits)
        order = sorted(c.lits, key=key) if key is not None else None
        outcome = distill_clause(f, c, order, probe=p)
        if outcome == REMOVED:
            stats.clauses_removed += 1
        elif outcome != UNCHANGED:
            stats.literals_removed += before - len(c.lits)
    stats.unsat = f.unsat
    stats.time_spent = b.elapsed()
    return stats
