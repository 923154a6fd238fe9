"""Subsumption (SUB) and self-subsuming resolution (RSUB).

Candidates for "C subsumes D" are drawn from the occurrence list of the
least-occurring literal of C and filtered by a 64-bit literal signature
before the exact subset test.
"""

from __future__ import annotations

from collections import deque

from ..cnf import Clause, Formula
from .stats import Budget, SimplifyStats


def signature(lits) -> int:
    sig = 0
    for l in lits:
        sig |= 1 << (l & 63)
    return sig


class _Sigs(dict):
    def of(self, c: Clause) -> int:
        s = self.get(id(c))
        if s is None:
            s = self[id(c)] = signature(c.lits)
        return s

    def refresh(self, c: Clause) -> None:
        self[id(c)] = signature(c.lits)


def _backward_subsume(f: Formula, c: Clause, sigs: _Sigs, stats: SimplifyStats) -> None:
    """Remove every clause that ``c`` subsumes."""
    if not c.lits:
        return
    pivot = min(c.lits, key=lambda l: len(f.occ[l]))
    sc = sigs.of(c)
    cset = None
    for d in f.occ[pivot]:
        if d is c or d.deleted or len(d.lits) < len(c.lits):
            continue
        if sc & ~sigs.of(d):
            continue
        if c.redundant and not d.redundant:
            continue
        if cset is None:
            cset = set(c.lits)
        if len(cset) <= len(d.lits) and cset.issubset(d.lits):
            f.remove_clause(d)
            stats.clauses_removed += 1


def subsume_pass(f: Formula, budget: float | None = None) -> SimplifyStats:
    stats = SimplifyStats()
    b = Budget(budget)
    sigs = _Sigs()
    for c in sorted(f.active(), key=lambda c: len(c.lits)):
        if f.unsat or b.expired():
            break
        if not c.deleted:
            _backward_subsume(f, c, sigs, stats)
    stats.unsat = f.unsat
    stats.time_spent = b.elapsed()
    return stats


def _self_subsume(f: Formula, c: Clause, sigs: _Sigs, stats: SimplifyStats) -> list[Clause]:
    """Strengthen clauses D where resolving with ``c`` yields a subset of D.

    Returns the strengthened clauses, ``c`` included when it shrank too.
    """
    changed: list[Clause] = []
    for l in list(c.lits):
        if c.deleted or l not in c.lits:
            break
        rest = [x for x in c.lits if x != l]
        srest = signature(rest)
        for d in f.occurrences(l ^ 1):
            if d is c or len(d.lits) < len(c.lits):
                continue
            if srest & ~sigs.of(d):
                continue
            dset = set(d.lits)
            if not all(x in dset for x in rest):
                continue
            same_size = len(d.lits) == len(c.lits)
            f.strengthen(d, l ^ 1)
            sigs.refresh(d)
            stats.literals_removed += 1
            changed.append(d)
            if f.unsat:
                return changed
            if same_size:
                # resolvent equals both antecedents minus the pivot
                f.strengthen(c, l)
                sigs.refresh(c)
                stats.literals_removed += 1
                changed.append(c)
                return changed
    return changed


def self_subsume_pass(f: Formula, budget: float | None = None) -> SimplifyStats:
    """RSUB to fixpoint, interleaved with backward subsumption."""
    stats = SimplifyStats()
    b = Budget(budget)
    sigs = _Sigs()
    queue = deque(sorted(f.active(), key=lambda c: len(c.lits)))
    queued = {id(c) for c in queue}
    while queue and not f.unsat and not b.expired():
        c = queue.popleft()
        queued.discard(id(c))
        if c.deleted:
            continue
        _backward_subsume(f, c, sigs, stats)
        for d in _self_subsume(f, c, sigs, stats):
            if id(d) not in queued and not d.deleted:
                queue.append(d)
                queued.add(id(d))
    stats.unsat = f.unsat
    stats.time_spent = b.elapsed()
    return stats
