"""CDCL solving with pre- and inprocessing (SUB, RSUB, BVE, BCE, UH, DI)."""

from .cnf import Assignment, Clause, Formula
from .dimacs import DimacsError, parse_dimacs, permute_instance, read_dimacs, write_dimacs
from .oracle import brute_force_sat
from .pipeline import BudgetPolicy, PassConfig, parse_config, run
from .solver import SolveResult, Solver, SolverConfig, Status, fixed_by_up, satisfies, solve

__version__ = "0.1.0"

__all__ = [
    "Assignment", "BudgetPolicy", "Clause", "DimacsError", "Formula", "PassConfig",
    "SolveResult", "Solver", "SolverConfig", "Status", "brute_force_sat", "fixed_by_up",
    "parse_config", "parse_dimacs", "permute_instance", "read_dimacs", "run", "satisfies",
    "solve", "write_dimacs",
]
