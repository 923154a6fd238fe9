from __future__ import annotations

import time
from dataclasses import dataclass, fields


@dataclass
class SimplifyStats:
    vars_eliminated: int = 0
    clauses_removed: int = 0
    clauses_added: int = 0
    literals_removed: int = 0
    time_spent: float = 0.0
    rounds: int = 0
    unsat: bool = False

    def absorb(self, other: "SimplifyStats") -> "SimplifyStats":
        for fld in fields(self):
            if fld.name == "unsat":
                self.unsat = self.unsat or other.unsat
            elif fld.name != "rounds":
                setattr(self, fld.name, getattr(self, fld.name) + getattr(other, fld.name))
        return self


class Budget:
    """Wall-clock budget for one pass; ``None`` seconds means unlimited."""

    def __init__(self, seconds: float | None):
        self.start = time.monotonic()
        self.deadline = None if seconds is None else self.start + max(0.0, seconds)

    def expired(self) -> bool:
        return self.deadline is not None and time.monotonic() >= self.deadline

    def elapsed(self) -> float:
        return time.monotonic() - self.start
