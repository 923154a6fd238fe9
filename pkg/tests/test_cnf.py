import pytest
from hypothesis import given, strategies as st

from satprep.cnf import Assignment, Formula, is_tautology, lit, make_lit, neg, to_dimacs, var
from strategies import cnfs


@given(st.integers(-1000, 1000).filter(bool))
def test_literal_roundtrip(x):
    l = lit(x)
    assert to_dimacs(l) == x
    assert var(l) == abs(x)
    assert to_dimacs(neg(l)) == -x


def test_literal_encoding():
    assert lit(3) == make_lit(3) == 6
    assert lit(-3) == make_lit(3, True) == 7
    with pytest.raises(ValueError):
        lit(0)
    with pytest.raises(ValueError):
        make_lit(0)


def test_tautology_dropped_and_duplicates_merged():
    f = Formula(3)
    assert f.add_clause([lit(1), lit(-1), lit(2)]) is None
    c = f.add_clause([lit(2), lit(2), lit(-3)])
    assert c.dimacs() == [2, -3]
    assert f.num_clauses() == 1
    assert is_tautology([lit(4), lit(-4)])


def test_units_and_empty_clause():
    f = Formula.from_clauses([[1], [-2, 3]])
    assert f.num_vars == 3
    assert [c.dimacs() for c in f.units] == [[1]]
    assert not f.unsat
    f.add_clause([])
    assert f.unsat


def test_strengthen_updates_index():
    f = Formula.from_clauses([[1, 2, 3], [-1, 2]])
    c = f.clauses[0]
    f.strengthen(c, lit(2))
    assert c.dimacs() == [1, 3]
    assert c not in f.occ[lit(2)]
    assert f.check_index()
    with pytest.raises(ValueError):
        f.strengthen(c, lit(2))
    f.strengthen(c, lit(3))
    assert f.units[-1] is c


def test_remove_is_lazy_until_compact():
    f = Formula.from_clauses([[1, 2], [2, 3]])
    c = f.clauses[0]
    f.remove_clause(c)
    assert c in f.occ[lit(1)]
    assert f.occurrences(lit(1)) == []
    assert f.check_index()
    f.compact()
    assert f.occ[lit(1)] == [] and len(f.clauses) == 1


def test_remaining_counts():
    f = Formula.from_clauses([[1], [1, 2], [-2, 3], [4, 5]])
    f.add_clause([lit(6), lit(7)], redundant=True)
    assert f.remaining_vars() == 4      # 2, 3, 4, 5; x1 is fixed
    assert f.remaining_clauses() == 3
    assert f.num_clauses(True) == 1


@given(cnfs())
def test_copy_and_index_consistency(data):
    n, clauses = data
    f = Formula.from_clauses(clauses, n)
    assert f.check_index()
    g = f.copy()
    assert g.clause_set() == f.clause_set()
    assert g.unsat == f.unsat
    assert g.check_index()


def test_assignment_trail_and_undo():
    a = Assignment(3)
    a.assign(lit(1))
    a.new_level()
    a.assign(lit(-2))
    a.assign(lit(3))
    assert a.decision_level == 1 and a.level[3] == 1
    assert a.undo_to(0) == [lit(-2), lit(3)]
    assert a.values[lit(2)] == 0 and a.values[lit(1)] == 1
    assert a.model() == {1: True, 2: False, 3: False}
