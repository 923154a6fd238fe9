"""Reconstruction stack: lifts models of a simplified formula back to the original."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from ..cnf import Formula, lit, to_dimacs


@dataclass(frozen=True)
class WitnessEntry:
    clause: tuple[int, ...]
    witness: int


@dataclass(frozen=True)
class SubstitutionEntry:
    var: int
    rep: int  # literal the variable was replaced by


Entry = Union[WitnessEntry, SubstitutionEntry]


@dataclass
class ReconstructionStack:
    entries: list[Entry] = field(default_factory=list)

    def push_clause(self, lits: Iterable[int], witness: int) -> None:
        lits = tuple(lits)
        if witness not in lits:
            raise ValueError("witness must be a literal of the stored clause")
        self.entries.append(WitnessEntry(lits, witness))

    def push_substitution(self, v: int, rep: int) -> None:
        self.entries.append(SubstitutionEntry(v, rep))

    def __len__(self) -> int:
        return len(self.entries)

    def renaming(self) -> dict[int, int]:
        """Variable -> literal it is finally represented by (substitutions composed)."""
        rep: dict[int, int] = {}
        for e in self.entries:
            if isinstance(e, SubstitutionEntry):
                rep[e.var] = e.rep
        resolved: dict[int, int] = {}

        def find(v: int) -> int:
            if v in resolved:
                return resolved[v]
            target = rep[v]
            sign = target & 1
            tv = target >> 1
            out = find(tv) ^ sign if tv in rep else target
            resolved[v] = out
            return out

        for v in rep:
            find(v)
        return resolved

    def map_literal(self, l: int, renaming: dict[int, int] | None = None) -> int:
        renaming = self.renaming() if renaming is None else renaming
        r = renaming.get(l >> 1)
        return l if r is None else r ^ (l & 1)

    def dumps(self) -> str:
        """Sidecar text, oldest entry first (newest last)."""
        out = []
        for e in self.entries:
            if isinstance(e, SubstitutionEntry):
                out.append(f"s {e.var} {to_dimacs(e.rep)}")
            else:
                body = " ".join(str(to_dimacs(l)) for l in e.clause)
                out.append(f"w {to_dimacs(e.witness)} : {body} 0")
        return "\n".join(out) + ("\n" if out else "")

    @classmethod
    def loads(cls, text: str) -> "ReconstructionStack":
        stack = cls()
        for lineno, line in enumerate(text.splitlines(), 1):
            parts = line.split()
            if not parts or parts[0] == "c":
                continue
            if parts[0] == "s" and len(parts) == 3:
                stack.push_substitution(int(parts[1]), lit(int(parts[2])))
            elif parts[0] == "w" and len(parts) >= 4 and parts[2] == ":" and parts[-1] == "0":
                stack.push_clause([lit(int(x)) for x in parts[3:-1]], lit(int(parts[1])))
            else:
                raise ValueError(f"line {lineno}: malformed stack entry {line!r}")
        return stack


def _true(model: dict[int, bool], l: int) -> bool:
    return model.get(l >> 1, False) != bool(l & 1)


def reconstruct_model(stack: ReconstructionStack, model: dict[int, bool],
                      formula: Formula | None = None) -> dict[int, bool]:
    """Replay ``stack`` newest-first over a copy of ``model``.

    If ``formula`` (the simplified formula) is given, ``model`` is checked
    against it first and a :class:`ValueError` raised when it does not satisfy it.
    """
    if formula is not None:
        for c in formula.active():
            if not any(_true(model, l) for l in c.lits):
                raise ValueError(f"model does not satisfy simplified clause {c!r}")
    out = dict(model)
    for e in reversed(stack.entries):
        if isinstance(e, SubstitutionEntry):
            out[e.var] = _true(out, e.rep)
        elif not any(_true(out, l) for l in e.clause):
            out[e.witness >> 1] = not e.witness & 1
    return out
