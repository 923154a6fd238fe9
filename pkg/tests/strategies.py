"""Hypothesis strategies for small CNF formulas."""

from hypothesis import strategies as st


@st.composite
def cnfs(draw, min_vars=1, max_vars=8, max_clauses=None, min_len=1, max_len=4):
    n = draw(st.integers(min_vars, max_vars))
    max_clauses = 4 * n if max_clauses is None else max_clauses
    lit = st.integers(1, n).flatmap(lambda v: st.sampled_from((v, -v)))
    clause = st.lists(lit, min_size=min_len, max_size=max_len)
    return n, draw(st.lists(clause, max_size=max_clauses))
