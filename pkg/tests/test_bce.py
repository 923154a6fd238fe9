import random

from hypothesis import given, strategies as st

from satprep.cnf import Formula, lit
from satprep.simplify import ReconstructionStack, bce_pass, is_blocked_on
from helpers import equisat_with_reconstruction
from strategies import cnfs


def test_blocked_on_literal():
    f = Formula.from_clauses([[1, 2], [-1, -2], [-1, 3]])
    c = f.clauses[0]
    assert not is_blocked_on(f, c, lit(1))   # resolvent with (-1 3) is (2 3)
    g = Formula.from_clauses([[1, 2], [-1, -2]])
    assert is_blocked_on(g, g.clauses[0], lit(1))


def test_removes_to_fixpoint():
    f = Formula.from_clauses([[1, 2], [-1, -2], [-1, 3], [-3, 4]])
    stack = ReconstructionStack()
    st = bce_pass(f, stack)
    assert f.num_clauses() == 0
    assert st.clauses_removed == 4 == len(stack)


def test_units_and_learned_kept():
    f = Formula.from_clauses([[1], [2, 3]])
    f.add_clause([lit(4), lit(5)], redundant=True)
    bce_pass(f, ReconstructionStack())
    assert f.clause_set() == [(1,)]
    assert f.num_clauses(True) == 1


@given(cnfs(max_vars=8, min_len=2), st.integers(0, 1000))
def test_confluent(data, seed):
    n, clauses = data
    base = Formula.from_clauses(clauses, n)
    bce_pass(base, ReconstructionStack())
    g = Formula.from_clauses(clauses, n)
    random.Random(seed).shuffle(g.clauses)
    bce_pass(g, ReconstructionStack(), seed=seed)
    assert g.clause_set() == base.clause_set()


@given(cnfs(max_vars=8))
def test_equisat_and_reconstruction(data):
    n, clauses = data
    orig = Formula.from_clauses(clauses, n)
    f = orig.copy()
    stack = ReconstructionStack()
    bce_pass(f, stack)
    equisat_with_reconstruction(orig, f, stack)
