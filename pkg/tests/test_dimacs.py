import logging
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from satprep.cnf import Formula
from satprep.dimacs import (
    DimacsError, PermutationSpec, flipped_vars, parse_dimacs, permute_instance,
    permuted_variants, read_dimacs, write_dimacs,
)
from satprep.oracle import brute_force_sat
from strategies import cnfs


def test_parse_basic():
    f = parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n2 3\n 0\n")
    assert f.num_vars == 3
    assert f.to_lists() == [[1, -2], [2, 3]]


def test_parse_bytes_and_terminator():
    f = parse_dimacs(b"p cnf 2 1\n1 2 0\n%\n0\n")
    assert f.to_lists() == [[1, 2]]


@pytest.mark.parametrize("text", [
    "1 2 0\n",
    "p cnf 2 1\np cnf 2 1\n1 0\n",
    "p cnf x 1\n1 0\n",
    "p dnf 2 1\n1 0\n",
    "p cnf 2 1\n1 a 0\n",
    "p cnf 2 1\n1 2\n",
    "",
])
def test_parse_rejects(text):
    with pytest.raises(DimacsError):
        parse_dimacs(text)


def test_parse_warns_on_mismatch(caplog):
    with caplog.at_level(logging.WARNING):
        f = parse_dimacs("p cnf 2 3\n1 5 0\n")
    assert f.num_vars == 5
    assert "exceeds" in caplog.text and "declares 3 clauses" in caplog.text


@given(cnfs())
def test_write_parse_roundtrip(data):
    n, clauses = data
    f = Formula.from_clauses(clauses, n)
    g = parse_dimacs(write_dimacs(f))
    assert g.num_vars == f.num_vars
    assert g.to_lists() == f.to_lists()


def test_read_file(tmp_path):
    p = tmp_path / "x.cnf"
    p.write_text("p cnf 1 1\n-1 0\n")
    assert read_dimacs(p).to_lists() == [[-1]]


def test_write_excludes_learned():
    f = Formula.from_clauses([[1, 2]])
    f.add_clause([2, 4], redundant=True)
    assert write_dimacs(f).splitlines()[0] == "p cnf 2 1"
    assert "p cnf 2 2" in write_dimacs(f, redundant=True)


def test_flips_depend_only_on_seed():
    assert flipped_vars(50, 3) == flipped_vars(50, 3)
    assert flipped_vars(50, 3) != flipped_vars(50, 4)
    a = permute_instance(Formula.from_clauses([[1, 2], [-3]]), PermutationSpec(3))
    b = permute_instance(Formula.from_clauses([[2, 1], [-3]]), PermutationSpec(3))
    assert a.clause_set() == b.clause_set()


def test_no_permutation_is_identity():
    f = Formula.from_clauses([[1, -2], [2, 3, -1]])
    g = permute_instance(f, PermutationSpec(1, False, False, False))
    assert g.to_lists() == f.to_lists()


@given(cnfs(max_vars=8), st.integers(0, 2**32))
def test_permutation_invariants(data, seed):
    n, clauses = data
    f = Formula.from_clauses(clauses, n)
    for g in permuted_variants(f, 3, seed):
        assert g.num_vars == f.num_vars
        assert Counter(map(len, g.to_lists())) == Counter(map(len, f.to_lists()))
        assert brute_force_sat(g, num_vars=n)[0] == brute_force_sat(f, num_vars=n)[0]


def test_polarity_flip_maps_models():
    f = Formula.from_clauses([[1, 2], [-1, 3], [-2, -3]])
    spec = PermutationSpec(11, permute_clause_order=False, permute_literal_order=False)
    flips = flipped_vars(3, 11)
    g = permute_instance(f, spec)
    _, model = brute_force_sat(g)
    back = {v: val != (v in flips) for v, val in model.items()}
    from satprep.solver import satisfies
    assert satisfies(f, back)
