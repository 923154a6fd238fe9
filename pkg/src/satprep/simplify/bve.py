"""Bounded variable elimination by clause distribution.

A variable is eliminated when the non-tautological resolvents of length >= 3
are fewer than the removed clauses and do not outnumber the removed clauses
of length >= 3.  Shorter resolvents are exempt from the count (they are
cheap and strengthen propagation) but capped at twice the removed count.
"""

from __future__ import annotations

import heapq

from ..cnf import Formula
from .stack import ReconstructionStack
from .stats import Budget, SimplifyStats

MAX_OCCURRENCES = 64  # per polarity; beyond this elimination is not attempted
MAX_RESOLVENT_LENGTH = 64


def _irredundant(f: Formula, l: int):
    return [c for c in f.occ[l] if not c.deleted and not c.redundant]


def _is_fixed(f: Formula, v: int) -> bool:
    return any(len(c.lits) == 1 for l in (2 * v, 2 * v + 1) for c in f.occ[l] if not c.deleted)


def resolvents(pos, neg, x: int, limit: int | None = None):
    """Non-tautological resolvents on ``x`` (x in every pos clause, -x in every neg).

    Returns ``None`` once more than ``limit`` resolvents of length >= 3 appear.
    """
    out: list[list[int]] = []
    seen: set[frozenset] = set()
    long_count = 0
    for p in pos:
        prest = [l for l in p.lits if l != x]
        pset = set(prest)
        for n in neg:
            r = list(prest)
            taut = False
            for l in n.lits:
                if l == x ^ 1 or l in pset:
                    continue
                if l ^ 1 in pset:
                    taut = True
                    break
                r.append(l)
            if taut:
                continue
            key = frozenset(r)
            if key in seen:
                continue
            seen.add(key)
            out.append(r)
            if len(r) >= 3:
                long_count += 1
                if limit is not None and long_count > limit:
                    return None
    return out


def try_eliminate(f: Formula, v: int, stack: ReconstructionStack, stats: SimplifyStats) -> bool:
    x = 2 * v
    pos, neg = _irredundant(f, x), _irredundant(f, x ^ 1)
    if not pos and not neg:
        return False
    if len(pos) > MAX_OCCURRENCES or len(neg) > MAX_OCCURRENCES:
        return False
    removed = len(pos) + len(neg)
    long_removed = sum(1 for c in pos + neg if len(c.lits) >= 3)
    res = resolvents(pos, neg, x, limit=min(removed - 1, long_removed))
    if res is None:
        return False
    long_new = sum(1 for r in res if len(r) >= 3)
    short_new = len(res) - long_new
    if long_new >= removed or long_new > long_removed or short_new > 2 * removed:
        return False
    if any(len(r) > MAX_RESOLVENT_LENGTH for r in res):
        return False
    for c in pos:
        stack.push_clause(c.lits, x)
    for c in neg:
        stack.push_clause(c.lits, x ^ 1)
    for c in pos + neg:
        f.remove_clause(c)
    # learned clauses mentioning x are dropped, not resolved
    for l in (x, x ^ 1):
        for c in f.occ[l]:
            if not c.deleted:
                f.remove_clause(c)
    for r in res:
        f.add_clause(r)
    stats.vars_eliminated += 1
    stats.clauses_removed += removed
    stats.clauses_added += len(res)
    return True


def _score(f: Formula, v: int) -> int:
    return len(_irredundant(f, 2 * v)) * len(_irredundant(f, 2 * v + 1))


def bve_pass(f: Formula, stack: ReconstructionStack, budget: float | None = None) -> SimplifyStats:
    """Eliminate variables in ascending order of |occ(x)| * |occ(-x)|."""
    stats = SimplifyStats()
    b = Budget(budget)
    heap = [(_score(f, v), v) for v in sorted(f.occurring_vars())]
    heapq.heapify(heap)
    pending = {v for _, v in heap}
    eliminated: set[int] = set()
    while heap and not f.unsat and not b.expired():
        score, v = heapq.heappop(heap)
        if v not in pending:
            continue
        current = _score(f, v)
        if current != score:
            heapq.heappush(heap, (current, v))
            continue
        pending.discard(v)
        if _is_fixed(f, v):
            continue
        neighbours = {u >> 1 for x in (2 * v, 2 * v + 1)
                      for c in f.occ[x] if not c.deleted for u in c.lits}
        if try_eliminate(f, v, stack, stats):
            eliminated.add(v)
            # each retry follows a successful elimination, so this terminates
            for u in sorted(neighbours - eliminated - pending):
                pending.add(u)
                heapq.heappush(heap, (_score(f, u), u))
    stats.unsat = f.unsat
    stats.time_spent = b.elapsed()
    return stats
