from __future__ import annotations

from ..cnf import Formula
from .stats import SimplifyStats


def propagate_units(f: Formula) -> SimplifyStats:
    """Level-0 unit propagation on the clause store.

    Unit clauses are kept (they record the fixing); every other clause
    satisfied by a unit, duplicate units included, is removed and falsified
    literals are stripped.  Conflicting units add the empty clause.
    """
    stats = SimplifyStats()
    fixed: dict[int, int] = {}
    for c in f.active():
        if len(c.lits) == 1:
            f.units.append(c)
    while f.units and not f.unsat:
        c = f.units.popleft()
        if c.deleted or len(c.lits) != 1:
            continue
        l = c.lits[0]
        known = fixed.get(l >> 1)
        if known is not None:
            if known != l:
                f.add_clause([])
            continue
        fixed[l >> 1] = l
        for d in f.occurrences(l):
            if d is not c:
                f.remove_clause(d)
                stats.clauses_removed += 1
        for d in f.occurrences(l ^ 1):
            f.strengthen(d, l ^ 1)
            stats.literals_removed += 1
            if not d.lits:
                break
    f.units.clear()
    stats.unsat = f.unsat
    return stats
