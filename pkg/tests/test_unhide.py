import random

from hypothesis import given, strategies as st

from satprep.cnf import Formula, lit
from satprep.simplify import ReconstructionStack, stamp, strongly_connected, unhide_round
from satprep.simplify.unhide import implication_graph
from helpers import renaming_clauses, same_models
from strategies import cnfs

A, B, C, D = 1, 2, 3, 4


def only(**flags):
    base = dict(equivalences=False, failed=False, transitive=False, hle=False, hte=False)
    base.update(flags)
    return base


def test_scc_substitution():
    f = Formula.from_clauses([[-A, B], [-B, A], [B, C, D]], 4)
    stack = ReconstructionStack()
    unhide_round(f, stack, **only(equivalences=True))
    assert stack.renaming() == {B: lit(A)}
    assert (1, 3, 4) in f.clause_set()
    assert all(B not in map(abs, c) for c in f.to_lists())


def test_scc_representatives_are_consistent():
    succ = implication_graph(Formula.from_clauses([[-1, 2], [-2, 3], [-3, 1], [4, 5]]))
    comps = [sorted(c) for c in strongly_connected(succ) if len(c) > 1]
    assert sorted(comps) == sorted([[lit(1), lit(2), lit(3)], [lit(-1), lit(-2), lit(-3)]])


def test_contradictory_scc_is_unsat():
    f = Formula.from_clauses([[-1, 2], [-2, -1], [1, -2], [2, 1]])
    st = unhide_round(f, ReconstructionStack())
    assert f.unsat and st.unsat


def test_transitive_edge_removed():
    f = Formula.from_clauses([[-A, B], [-B, C], [-A, C]], 3)
    unhide_round(f, ReconstructionStack(), **only(transitive=True))
    assert f.num_clauses() == 2
    assert same_models([[-A, B], [-B, C], [-A, C]], f.to_lists(), 3)


def test_hidden_tautology():
    f = Formula.from_clauses([[-A, B], [-B, C], [-A, C, D]], 4)
    unhide_round(f, ReconstructionStack(), **only(hte=True))
    assert (-A, C, D) not in {tuple(sorted(c, key=abs)) for c in f.to_lists()}
    assert f.num_clauses() == 2


def test_hidden_literal():
    f = Formula.from_clauses([[-A, B], [A, B, C]], 3)
    unhide_round(f, ReconstructionStack(), **only(hle=True))
    assert [2, 3] in [sorted(c) for c in f.to_lists()]


def test_failed_literal():
    f = Formula.from_clauses([[-A, B], [-A, -B]], 2)
    unhide_round(f, ReconstructionStack(), **only(failed=True))
    assert (-A,) in f.clause_set()


def test_stamps_parenthesis_property():
    rng = random.Random(1)
    clauses = [[rng.choice((1, -1)) * rng.randint(1, 10), rng.choice((1, -1)) * rng.randint(1, 10)]
               for _ in range(25)]
    f = Formula.from_clauses(clauses, 10)
    succ = implication_graph(f)
    s = stamp(succ, random.Random(2))
    for u in range(2, len(succ)):
        for v, _ in succ[u]:
            if s.implies(u, v):
                assert (s.dsc[u] < s.dsc[v] and s.fin[v] <= s.fin[u]) or \
                       (s.dsc[v ^ 1] < s.dsc[u ^ 1] and s.fin[u ^ 1] <= s.fin[v ^ 1])


@given(cnfs(max_vars=9), st.integers(0, 100))
def test_never_grows(data, seed):
    n, clauses = data
    f = Formula.from_clauses(clauses, n)
    before = f.num_clauses()
    lengths = {id(c): len(c.lits) for c in f.active()}
    unhide_round(f, ReconstructionStack(), seed)
    assert f.num_clauses() <= before
    for c in f.active():
        if id(c) in lengths:
            assert len(c.lits) <= lengths[id(c)]


@given(cnfs(max_vars=9), st.integers(0, 100))
def test_preserves_models_modulo_renaming(data, seed):
    n, clauses = data
    f = Formula.from_clauses(clauses, n)
    stack = ReconstructionStack()
    unhide_round(f, stack, seed)
    assert same_models(clauses, f.to_lists() + renaming_clauses(stack), n)
