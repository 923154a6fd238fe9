from hypothesis import given

from satprep.cnf import Formula, lit
from satprep.simplify import (
    ReconstructionStack, SubstitutionEntry, WitnessEntry, bce_pass, bve_pass, reconstruct_model,
    unhide_round,
)
from satprep.oracle import brute_force_sat
from satprep.solver import satisfies
from strategies import cnfs


def test_witness_flip():
    s = ReconstructionStack()
    s.push_clause([lit(1), lit(2)], lit(1))
    assert reconstruct_model(s, {1: False, 2: False}) == {1: True, 2: False}
    assert satisfies(Formula.from_clauses([[1, 2], [-1, -2]]), {1: True, 2: False})


def test_empty_stack_identity():
    assert reconstruct_model(ReconstructionStack(), {1: True}) == {1: True}


def test_substitution_copy_through():
    s = ReconstructionStack()
    s.push_substitution(3, lit(-2))
    s.push_substitution(2, lit(1))
    assert s.renaming() == {2: lit(1), 3: lit(-1)}
    assert reconstruct_model(s, {1: True}) == {1: True, 2: True, 3: False}


def test_witness_must_belong_to_clause():
    try:
        ReconstructionStack().push_clause([lit(1)], lit(2))
    except ValueError:
        return
    raise AssertionError


def test_rejects_non_model_of_simplified():
    f = Formula.from_clauses([[1]])
    try:
        reconstruct_model(ReconstructionStack(), {1: False}, f)
    except ValueError:
        return
    raise AssertionError


def test_sidecar_roundtrip():
    s = ReconstructionStack()
    s.push_clause([lit(1), lit(-2)], lit(-2))
    s.push_substitution(4, lit(-3))
    text = s.dumps()
    assert text.splitlines() == ["w -2 : 1 -2 0", "s 4 -3"]
    t = ReconstructionStack.loads(text)
    assert t.entries == [WitnessEntry((lit(1), lit(-2)), lit(-2)), SubstitutionEntry(4, lit(-3))]


@given(cnfs(max_vars=9))
def test_reconstruction_after_combined_passes(data):
    n, clauses = data
    orig = Formula.from_clauses(clauses, n)
    f = orig.copy()
    stack = ReconstructionStack()
    bce_pass(f, stack)
    unhide_round(f, stack, 1)
    bve_pass(f, stack)
    sat, model = brute_force_sat(f.to_lists(None), num_vars=n)
    assert sat == brute_force_sat(orig)[0]
    if sat:
        lifted = reconstruct_model(ReconstructionStack.loads(stack.dumps()), model)
        assert satisfies(orig, lifted)
