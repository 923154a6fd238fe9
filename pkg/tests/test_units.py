from satprep.cnf import Formula
from satprep.simplify import propagate_units


def test_propagates_and_keeps_units():
    f = Formula.from_clauses([[1], [-1, 2], [1, 3], [-2, 3, 4]])
    propagate_units(f)
    assert f.clause_set() == [(1,), (2,), (3, 4)]


def test_conflict_marks_unsat():
    f = Formula.from_clauses([[1], [-1, 2], [-2]])
    st = propagate_units(f)
    assert f.unsat and st.unsat


def test_duplicate_units_merged():
    f = Formula.from_clauses([[1], [1], [1, 2]])
    propagate_units(f)
    assert f.clause_set() == [(1,)]
