"""DIMACS CNF reading/writing and seeded instance permutation."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from .cnf import Formula, lit, to_dimacs

log = logging.getLogger(__name__)


class DimacsError(ValueError):
    pass


def parse_dimacs(text: str | bytes) -> Formula:
    if isinstance(text, bytes):
        text = text.decode()
    header: tuple[int, int] | None = None
    f: Formula | None = None
    current: list[int] = []
    parsed = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            # legacy SATLIB terminator; anything after it is padding
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise DimacsError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from None
            f = Formula(header[0])
            continue
        if f is None:
            raise DimacsError(f"line {lineno}: clause before 'p cnf' header")
        for tok in line.split():
            try:
                x = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer token {tok!r}") from None
            if x == 0:
                f.add_clause([lit(y) for y in current])
                current = []
                parsed += 1
            else:
                if abs(x) > header[0] and abs(x) > f.num_vars:
                    log.warning("literal %d exceeds declared %d variables", x, header[0])
                current.append(x)
    if header is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        raise DimacsError("unterminated final clause")
    if parsed != header[1]:
        log.warning("header declares %d clauses, found %d", header[1], parsed)
    return f


def read_dimacs(path) -> Formula:
    with open(path, "rb") as fh:
        return parse_dimacs(fh.read())


def write_dimacs(f: Formula, redundant: bool = False) -> str:
    """Serialise non-deleted clauses (irredundant unless ``redundant``)."""
    clauses = [c for c in f.active(None if redundant else False)]
    out = [f"p cnf {f.num_vars} {len(clauses)}"]
    for c in clauses:
        out.append(" ".join(str(to_dimacs(l)) for l in c.lits) + " 0")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class PermutationSpec:
    """What to shuffle.  The generator is Python's ``random.Random`` (MT19937)."""

    seed: int = 0
    permute_clause_order: bool = True
    permute_literal_order: bool = True
    flip_polarities: bool = True


def flipped_vars(num_vars: int, seed: int) -> set[int]:
    """Variables whose polarity a permutation with ``seed`` flips (each with p = 1/2)."""
    rng = random.Random(seed)
    return {v for v in range(1, num_vars + 1) if rng.random() < 0.5}


def permute_instance(f: Formula, spec: PermutationSpec) -> Formula:
    # flips come from their own stream so they depend only on the seed
    flips = flipped_vars(f.num_vars, spec.seed) if spec.flip_polarities else set()
    rng = random.Random(spec.seed ^ 0x9E3779B97F4A7C15)
    clauses = [list(c.lits) for c in f.active(False)]
    if spec.permute_clause_order:
        rng.shuffle(clauses)
    g = Formula(f.num_vars)
    for c in clauses:
        if flips:
            c = [l ^ 1 if (l >> 1) in flips else l for l in c]
        if spec.permute_literal_order:
            rng.shuffle(c)
        g.add_clause(c)
    return g


def permuted_variants(f: Formula, count: int, seed: int, **flags) -> list[Formula]:
    """``count`` independent permutations, each with a seed drawn from ``seed``."""
    rng = random.Random(seed)
    seeds = [rng.getrandbits(64) for _ in range(count)]
    return [permute_instance(f, PermutationSpec(s, **flags)) for s in seeds]
