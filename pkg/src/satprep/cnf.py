"""CNF object model: literals, clauses, formulas with occurrence lists.

Literals are plain ints encoded as ``2 * var + sign`` where ``sign`` is 1 for
the negative literal.  This keeps per-literal tables (occurrence lists,
watches, values) as flat lists indexed by the literal itself.  Conversion to
and from the signed DIMACS convention happens at the I/O boundaries via
:func:`lit` and :func:`to_dimacs`.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence


def lit(dimacs: int) -> int:
    """Encode a signed DIMACS literal (``3``, ``-3``) as an internal literal."""
    if dimacs == 0:
        raise ValueError("0 is not a literal")
    return 2 * dimacs if dimacs > 0 else -2 * dimacs + 1


def make_lit(v: int, negative: bool = False) -> int:
    if v < 1:
        raise ValueError(f"variable index must be >= 1, got {v}")
    return 2 * v + int(negative)


def to_dimacs(l: int) -> int:
    return -(l >> 1) if l & 1 else l >> 1


def var(l: int) -> int:
    return l >> 1


def neg(l: int) -> int:
    return l ^ 1


def is_negative(l: int) -> bool:
    return bool(l & 1)


def is_tautology(lits: Iterable[int]) -> bool:
    seen = set(lits)
    return any(l ^ 1 in seen for l in seen)


class Clause:
    __slots__ = ("lits", "redundant", "activity", "deleted")

    def __init__(self, lits: list[int], redundant: bool = False, activity: float = 0.0):
        self.lits = lits
        self.redundant = redundant
        self.activity = activity
        self.deleted = False

    def __len__(self) -> int:
        return len(self.lits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.lits)

    def __contains__(self, l: int) -> bool:
        return l in self.lits

    def dimacs(self) -> list[int]:
        return [to_dimacs(l) for l in self.lits]

    def __repr__(self) -> str:
        flags = ("R" if self.redundant else "") + ("D" if self.deleted else "")
        return f"Clause({self.dimacs()}{', ' + flags if flags else ''})"


class Formula:
    """A clause store with per-literal occurrence lists.

    Clause objects are stable references: strengthening edits them in place.
    Removal only flags a clause as deleted; occurrence lists are purged
    lazily by :meth:`compact`.  Unit clauses stay in the store (they encode
    level-0 fixings) and are queued on :attr:`units` when they appear.
    """

    def __init__(self, num_vars: int = 0):
        self.num_vars = 0
        self.clauses: list[Clause] = []
        self.occ: list[list[Clause]] = [[], []]
        self.units: deque[Clause] = deque()
        self.unsat = False
        self.grow(num_vars)

    @classmethod
    def from_clauses(cls, clauses: Iterable[Sequence[int]], num_vars: int = 0) -> "Formula":
        """Build a formula from clauses given as signed DIMACS ints."""
        f = cls(num_vars)
        for c in clauses:
            f.add_clause([lit(x) for x in c])
        return f

    def grow(self, num_vars: int) -> None:
        if num_vars > self.num_vars:
            self.occ.extend([] for _ in range(2 * (num_vars - self.num_vars)))
            self.num_vars = num_vars

    def add_clause(self, lits: Iterable[int], redundant: bool = False,
                   activity: float = 0.0) -> Clause | None:
        """Store a clause; returns ``None`` (and stores nothing) for tautologies."""
        uniq = list(dict.fromkeys(lits))
        if is_tautology(uniq):
            return None
        top = max((l >> 1 for l in uniq), default=0)
        if top > self.num_vars:
            self.grow(top)
        c = Clause(uniq, redundant, activity)
        self.clauses.append(c)
        for l in uniq:
            self.occ[l].append(c)
        if len(uniq) == 1:
            self.units.append(c)
        elif not uniq:
            self.unsat = True
        return c

    def strengthen(self, c: Clause, l: int) -> Clause:
        if c.deleted or l not in c.lits:
            raise ValueError(f"cannot strengthen {c!r} by {to_dimacs(l)}")
        c.lits.remove(l)
        self.occ[l].remove(c)
        if len(c.lits) == 1:
            self.units.append(c)
        elif not c.lits:
            self.unsat = True
        return c

    def remove_clause(self, c: Clause) -> None:
        c.deleted = True

    def compact(self) -> None:
        """Drop deleted clauses from the store and all occurrence lists."""
        self.clauses = [c for c in self.clauses if not c.deleted]
        for i, lst in enumerate(self.occ):
            if any(c.deleted for c in lst):
                self.occ[i] = [c for c in lst if not c.deleted]

    def occurrences(self, l: int) -> list[Clause]:
        return [c for c in self.occ[l] if not c.deleted]

    def active(self, redundant: bool | None = None) -> Iterator[Clause]:
        """Non-deleted clauses; ``redundant`` filters learned/irredundant."""
        for c in self.clauses:
            if not c.deleted and (redundant is None or c.redundant == redundant):
                yield c

    def num_clauses(self, redundant: bool | None = False) -> int:
        return sum(1 for _ in self.active(redundant))

    def fixed_literals(self) -> set[int]:
        return {c.lits[0] for c in self.active() if len(c.lits) == 1}

    def occurring_vars(self) -> set[int]:
        return {l >> 1 for c in self.active(False) for l in c.lits}

    def remaining_vars(self) -> int:
        """Variables still free: occurring in irredundant clauses, not fixed by a unit."""
        fixed = {l >> 1 for l in self.fixed_literals()}
        return len(self.occurring_vars() - fixed)

    def remaining_clauses(self) -> int:
        """Irredundant clauses of length >= 2 (units count as fixed variables)."""
        return sum(1 for c in self.active(False) if len(c.lits) != 1)

    def to_lists(self, redundant: bool | None = False) -> list[list[int]]:
        return [c.dimacs() for c in self.active(redundant)]

    def clause_set(self, redundant: bool | None = False) -> list[tuple[int, ...]]:
        """Canonical sorted form of the clause multiset, for comparisons."""
        return sorted(tuple(sorted(c)) for c in self.to_lists(redundant))

    def copy(self) -> "Formula":
        g = Formula(self.num_vars)
        for c in self.clauses:
            if not c.deleted:
                g.add_clause(list(c.lits), c.redundant, c.activity)
        g.unsat = g.unsat or self.unsat
        return g

    def check_index(self) -> bool:
        """Full rebuild-and-compare of the occurrence index."""
        for l in range(2, 2 * self.num_vars + 2):
            live = [c for c in self.occ[l] if not c.deleted]
            if len(live) != len({id(c) for c in live}):
                return False
            expected = {id(c) for c in self.clauses if not c.deleted and l in c.lits}
            if {id(c) for c in live} != expected:
                return False
        return True

    def __repr__(self) -> str:
        return f"Formula(vars={self.num_vars}, clauses={self.num_clauses(None)}, unsat={self.unsat})"


class Assignment:
    """Partial assignment with a trail, decision levels and reason clauses.

    ``values`` is indexed by literal: 1 true, -1 false, 0 unassigned.
    """

    def __init__(self, num_vars: int):
        self.num_vars = num_vars
        self.values = [0] * (2 * num_vars + 2)
        self.level = [0] * (num_vars + 1)
        self.reason: list[Clause | None] = [None] * (num_vars + 1)
        self.trail: list[int] = []
        self.trail_lim: list[int] = []

    @property
    def decision_level(self) -> int:
        return len(self.trail_lim)

    def value(self, l: int) -> int:
        return self.values[l]

    def assign(self, l: int, reason: Clause | None = None) -> None:
        v = l >> 1
        self.values[l] = 1
        self.values[l ^ 1] = -1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(l)

    def new_level(self) -> None:
        self.trail_lim.append(len(self.trail))

    def undo_to(self, level: int) -> list[int]:
        """Unassign everything above ``level``; returns the undone literals."""
        if level >= len(self.trail_lim):
            return []
        start = self.trail_lim[level]
        undone = self.trail[start:]
        values = self.values
        for l in undone:
            values[l] = values[l ^ 1] = 0
            self.reason[l >> 1] = None
        del self.trail[start:]
        del self.trail_lim[level:]
        return undone

    def model(self) -> dict[int, bool]:
        return {v: self.values[2 * v] == 1 for v in range(1, self.num_vars + 1)}
