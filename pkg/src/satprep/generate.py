"""Seeded random CNF generators for tests, benchmarks and scripts."""

from __future__ import annotations

import random

from .cnf import Formula

EXAMPLE_F = [[-1, 2], [-1, 2, 3], [-1, -2]]


def random_kcnf(n: int, m: int, k: int = 3, seed: int | random.Random = 0) -> list[list[int]]:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return [[v if rng.random() < 0.5 else -v for v in rng.sample(range(1, n + 1), k)]
            for _ in range(m)]


def random_mixed_cnf(rng: random.Random, min_vars: int = 3, max_vars: int = 12,
                     ratio: float = 5.0, weights=(1, 4, 6, 3)) -> tuple[int, list[list[int]]]:
    """Up to ``ratio * n`` clauses of lengths 1-4 over ``min_vars..max_vars`` variables."""
    n = rng.randint(min_vars, max_vars)
    m = rng.randint(1, int(ratio * n))
    clauses = []
    for _ in range(m):
        k = min(rng.choices((1, 2, 3, 4), weights)[0], n)
        clauses.append([v if rng.random() < 0.5 else -v for v in rng.sample(range(1, n + 1), k)])
    return n, clauses


def random_formula(rng: random.Random, **kw) -> Formula:
    n, clauses = random_mixed_cnf(rng, **kw)
    return Formula.from_clauses(clauses, n)


def binary_heavy_cnf(rng: random.Random, n: int, m_bin: int, m_long: int) -> list[list[int]]:
    """Many binary clauses (rich implication graph) plus some longer ones."""
    out = random_kcnf(n, m_bin, 2, rng)
    for _ in range(m_long):
        k = rng.randint(3, min(5, n))
        out.append([v if rng.random() < 0.5 else -v for v in rng.sample(range(1, n + 1), k)])
    return out


def write_suite(directory, count: int = 30, seed: int = 0, hard: int = 2) -> list:
    """Write a mixed benchmark suite plus ``manifest.txt``; returns the instance paths.

    The suite holds the three-clause example formula, ``hard`` larger random
    3-SAT instances near the phase transition (likely to hit short timeouts),
    and small random 3-SAT instances for the rest.
    """
    from pathlib import Path

    from .dimacs import write_dimacs

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(seed)
    paths = []

    def emit(name, clauses, n):
        p = out / f"{name}.cnf"
        p.write_text(write_dimacs(Formula.from_clauses(clauses, n)))
        paths.append(p)

    emit("example_f", EXAMPLE_F, 3)
    for i in range(hard):
        emit(f"hard_{i:02d}", random_kcnf(200, 852, 3, rng), 200)
    for i in range(count - 1 - hard):
        n = rng.randint(20, 60)
        emit(f"rand_{i:02d}", random_kcnf(n, int(rng.uniform(3.0, 5.0) * n), 3, rng), n)
    (out / "manifest.txt").write_text("".join(f"{p.name}\n" for p in paths))
    return paths
