"""Shared checks for the simplification tests."""

import numpy as np

from satprep.cnf import to_dimacs
from satprep.oracle import brute_force_sat, satisfying_rows
from satprep.simplify import reconstruct_model
from satprep.solver import satisfies


def same_models(a_clauses, b_clauses, n):
    return np.array_equal(satisfying_rows(a_clauses, n), satisfying_rows(b_clauses, n))


def equisat_with_reconstruction(orig, simplified, stack):
    """Simplified is satisfiable iff orig is, and a model lifts back correctly."""
    n = orig.num_vars
    sat, model = brute_force_sat(simplified.to_lists(None), num_vars=max(n, simplified.num_vars))
    assert sat == brute_force_sat(orig)[0]
    if sat:
        lifted = reconstruct_model(stack, model)
        assert satisfies(orig, lifted)


def renaming_clauses(stack):
    out = []
    for v, r in stack.renaming().items():
        out += [[-v, to_dimacs(r)], [v, -to_dimacs(r)]]
    return out
