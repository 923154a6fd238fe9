"""Unhiding on the binary implication graph (BIG).

Each binary clause (a | b) contributes the edges -a -> b and -b -> a.  One
round of :func:`unhide_round`:

1. substitutes every strongly connected component by its lowest-variable
   literal (an SCC holding both l and -l makes the formula UNSAT);
2. stamps the BIG with a randomized depth-first traversal, giving each
   literal a discovery/finish interval;
3. uses interval containment ("l' lies in the DFS subtree of l", or the same
   for the contrapositive) as a sound but incomplete implication test to
   find failed literals, transitive binary clauses, hidden literals and
   hidden tautologies.

Hidden literal and hidden tautology elimination only touch clauses of length
>= 3, so the implications they rely on never depend on the clause being
modified.  A binary clause is dropped as transitive when one of its two
edges u -> v is not a tree edge but v lies below u in the DFS tree anyway.
If the clause's other edge is a tree edge, the removal cuts the tree, so
those removals wait until all other stamp queries are done and are only
made while the certifying tree path avoids every edge cut so far.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..cnf import Clause, Formula
from .stack import ReconstructionStack
from .stats import Budget, SimplifyStats
from .units import propagate_units

DEFAULT_ROUNDS = 3


def implication_graph(f: Formula) -> list[list[tuple[int, Clause]]]:
    succ: list[list[tuple[int, Clause]]] = [[] for _ in range(2 * f.num_vars + 2)]
    for c in f.active():
        if len(c.lits) == 2:
            a, b = c.lits
            succ[a ^ 1].append((b, c))
            succ[b ^ 1].append((a, c))
    return succ


def strongly_connected(succ) -> list[list[int]]:
    """Tarjan's algorithm (iterative); components with >= 2 literals only."""
    n = len(succ)
    index = [0] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 1
    out: list[list[int]] = []
    for root in range(2, n):
        if index[root] or not succ[root]:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]
        while work:
            node, i = work[-1]
            edges = succ[node]
            if i < len(edges):
                work[-1] = (node, i + 1)
                child = edges[i][0]
                if not index[child]:
                    index[child] = low[child] = counter
                    counter += 1
                    stack.append(child)
                    on_stack[child] = True
                    work.append((child, 0))
                elif on_stack[child]:
                    low[node] = min(low[node], index[child])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    x = stack.pop()
                    on_stack[x] = False
                    comp.append(x)
                    if x == node:
                        break
                if len(comp) > 1:
                    out.append(comp)
    return out


def substitute_equivalences(f: Formula, stack: ReconstructionStack, stats: SimplifyStats) -> bool:
    """Replace each SCC of the BIG by one representative.  False if UNSAT was found."""
    comps = strongly_connected(implication_graph(f))
    mapping: dict[int, int] = {}
    for comp in comps:
        members = set(comp)
        if any(l ^ 1 in members for l in comp):
            f.add_clause([])
            return False
        rep = min(comp, key=lambda l: l >> 1)
        for l in comp:
            if l != rep:
                mapping[l] = rep
                mapping[l ^ 1] = rep ^ 1
    if not mapping:
        return True
    for l in sorted(mapping):
        if not l & 1:
            stack.push_substitution(l >> 1, mapping[l])
            stats.vars_eliminated += 1
    affected: dict[int, Clause] = {}
    for l in mapping:
        for c in f.occ[l]:
            if not c.deleted:
                affected[id(c)] = c
    for c in sorted(affected.values(), key=lambda c: min(c.lits)):
        new = [mapping.get(l, l) for l in c.lits]
        f.remove_clause(c)
        if f.add_clause(new, c.redundant, c.activity) is None:
            stats.clauses_removed += 1
        else:
            stats.literals_removed += len(c.lits) - len(set(new))
    return not f.unsat


@dataclass
class Stamps:
    dsc: list[int]
    fin: list[int]
    tree: set[tuple[int, int]]  # (id(clause), parent literal) per DFS tree edge

    def below(self, a: int, b: int) -> bool:
        """b is a proper descendant of a in the DFS forest."""
        dsc, fin = self.dsc, self.fin
        return bool(dsc[a]) and dsc[a] < dsc[b] and fin[b] < fin[a]

    def on_path(self, u: int, v: int, x: int) -> bool:
        """x lies on the tree path from u down to v (u excluded)."""
        return self.below(u, x) and (x == v or self.below(x, v))

    def implies(self, a: int, b: int) -> bool:
        """Certified a -> b: b in a's DFS subtree, or -a in -b's."""
        dsc, fin = self.dsc, self.fin
        if dsc[a] and dsc[b] and dsc[a] < dsc[b] and fin[b] < fin[a]:
            return True
        na, nb = a ^ 1, b ^ 1
        return bool(dsc[nb] and dsc[na] and dsc[nb] < dsc[na] and fin[na] < fin[nb])


def stamp(succ, rng: random.Random) -> Stamps:
    n = len(succ)
    dsc = [0] * n
    fin = [0] * n
    tree: set[tuple[int, int]] = set()
    has_pred = [False] * n
    for edges in succ:
        for child, _ in edges:
            has_pred[child] = True
    nodes = [l for l in range(2, n) if succ[l]]
    roots = [l for l in nodes if not has_pred[l]]
    rest = [l for l in nodes if has_pred[l]]
    rng.shuffle(roots)
    rng.shuffle(rest)
    t = 0
    for root in roots + rest:
        if dsc[root]:
            continue
        t += 1
        dsc[root] = t
        children = list(succ[root])
        rng.shuffle(children)
        work = [(root, children)]
        while work:
            node, todo = work[-1]
            while todo:
                child, c = todo.pop()
                if not dsc[child]:
                    tree.add((id(c), node))
                    t += 1
                    dsc[child] = t
                    grandchildren = list(succ[child])
                    rng.shuffle(grandchildren)
                    work.append((child, grandchildren))
                    break
            else:
                t += 1
                fin[node] = t
                work.pop()
    return Stamps(dsc, fin, tree)


def _stamped_round(f: Formula, rng: random.Random, stats: SimplifyStats, b: Budget, *,
                   failed: bool, transitive: bool, hle: bool, hte: bool) -> None:
    succ = implication_graph(f)
    st = stamp(succ, rng)
    implies = st.implies

    if failed:
        fixed = f.fixed_literals()
        for l in range(2, len(succ)):
            if succ[l] and implies(l, l ^ 1) and (l ^ 1) not in fixed:
                f.add_clause([l ^ 1])
                fixed.add(l ^ 1)
                stats.clauses_added += 1

    deferred = []
    if transitive:
        tree = st.tree
        for c in list(f.active()):
            if len(c.lits) != 2:
                continue
            a, b_ = c.lits
            for u, v in ((a ^ 1, b_), (b_ ^ 1, a)):
                if (id(c), u) in tree or not st.below(u, v):
                    continue
                if (id(c), v ^ 1) in tree:
                    # the reverse edge -v -> -u is a tree edge
                    deferred.append((c, u, v, u ^ 1))
                else:
                    f.remove_clause(c)
                    stats.clauses_removed += 1
                break

    if hle or hte:
        _hidden(f, implies, stats, b, hle, hte)

    cut: list[int] = []
    for c, u, v, child in deferred:
        if c.deleted or b.expired():
            continue
        if st.on_path(u, v, child) or any(st.on_path(u, v, x) for x in cut):
            continue
        f.remove_clause(c)
        stats.clauses_removed += 1
        cut.append(child)


def _hidden(f: Formula, implies, stats: SimplifyStats, b: Budget, hle: bool, hte: bool) -> None:
    for c in list(f.active()):
        if len(c.lits) < 3 or c.deleted:
            continue
        if b.expired():
            return
        lits = c.lits
        if hte and any(implies(l ^ 1, m) for l in lits for m in lits):
            f.remove_clause(c)
            stats.clauses_removed += 1
            continue
        if hle:
            for l in list(lits):
                if any(m != l and implies(l, m) for m in c.lits):
                    f.strengthen(c, l)
                    stats.literals_removed += 1


def unhide_round(f: Formula, stack: ReconstructionStack, rng_seed: int = 0,
                 budget: float | None = None, *, rounds: int = DEFAULT_ROUNDS,
                 equivalences: bool = True, failed: bool = True, transitive: bool = True,
                 hle: bool = True, hte: bool = True) -> SimplifyStats:
    """Unhiding with HLE and HTE; the keyword flags switch parts off for analysis."""
    stats = SimplifyStats()
    b = Budget(budget)
    rng = random.Random(rng_seed)
    for _ in range(rounds):
        if f.unsat or b.expired():
            break
        if equivalences and not substitute_equivalences(f, stack, stats):
            break
        if b.expired():
            break
        _stamped_round(f, rng, stats, b, failed=failed, transitive=transitive, hle=hle, hte=hte)
        if failed:
            units = propagate_units(f)
            stats.clauses_removed += units.clauses_removed
            stats.literals_removed += units.literals_removed
        stats.rounds += 1
    stats.unsat = f.unsat
    stats.time_spent = b.elapsed()
    return stats
