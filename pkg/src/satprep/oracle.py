"""Exhaustive-enumeration SAT oracle used to check everything else.

Assignments are enumerated in lexicographic order over (x1, ..., xn) with
false < true, so row ``i`` of the enumeration sets ``x_k`` to bit
``n - k`` of ``i``.  Rows are bit-packed, so one clause costs a few
vectorised byte operations over ``2**n / 8`` bytes.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .cnf import Formula

DEFAULT_CAP = 20


class OracleCapExceeded(ValueError):
    pass


@lru_cache(maxsize=32)
def _columns(n: int) -> np.ndarray:
    """Packed truth columns: ``cols[v - 1]`` has bit i set iff row i sets x_v."""
    rows = np.arange(1 << n, dtype=np.uint32)
    cols = np.empty((max(n, 1), max(1, ((1 << n) + 7) // 8)), dtype=np.uint8)
    for v in range(1, n + 1):
        cols[v - 1] = np.packbits(((rows >> (n - v)) & 1).astype(np.uint8))
    return cols


def _clauses(f: Formula | Sequence[Sequence[int]]) -> tuple[int, list[list[int]]]:
    if isinstance(f, Formula):
        return f.num_vars, f.to_lists(None)
    clauses = [list(c) for c in f]
    return max((abs(x) for c in clauses for x in c), default=0), clauses


def satisfying_rows(f: Formula | Sequence[Sequence[int]], num_vars: int | None = None,
                    cap: int = DEFAULT_CAP) -> np.ndarray:
    """Boolean vector over all ``2**n`` assignments: which ones satisfy ``f``."""
    n, clauses = _clauses(f)
    if num_vars is not None:
        n = max(n, num_vars)
    if n > cap:
        raise OracleCapExceeded(f"{n} variables exceed the oracle cap of {cap}")
    cols = _columns(n)
    ok = np.full(cols.shape[1], 0xFF, dtype=np.uint8)
    for c in clauses:
        sat = np.zeros_like(ok)
        for x in c:
            col = cols[abs(x) - 1]
            sat |= col if x > 0 else ~col
        ok &= sat
        if not ok.any():
            break
    return np.unpackbits(ok, count=1 << n).astype(bool)


def brute_force_sat(f: Formula | Sequence[Sequence[int]], cap: int = DEFAULT_CAP,
                    num_vars: int | None = None) -> tuple[bool, dict[int, bool] | None]:
    """``(True, first model)`` or ``(False, None)``."""
    n, _ = _clauses(f)
    if num_vars is not None:
        n = max(n, num_vars)
    rows = satisfying_rows(f, n, cap)
    hits = np.flatnonzero(rows)
    if hits.size == 0:
        return False, None
    i = int(hits[0])
    return True, {v: bool((i >> (n - v)) & 1) for v in range(1, n + 1)}


def row_of(model: dict[int, bool], n: int) -> int:
    return sum(1 << (n - v) for v in range(1, n + 1) if model.get(v, False))
