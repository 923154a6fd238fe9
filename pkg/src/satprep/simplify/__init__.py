"""Formula simplification passes and model reconstruction."""

from .bce import bce_pass, is_blocked_on
from .bve import bve_pass, try_eliminate
from .distill import REMOVED, REPLACED, STRENGTHENED, UNCHANGED, distill_clause, distill_pass
from .stack import ReconstructionStack, SubstitutionEntry, WitnessEntry, reconstruct_model
from .stats import SimplifyStats
from .subsume import self_subsume_pass, subsume_pass
from .unhide import Stamps, stamp, strongly_connected, unhide_round
from .units import propagate_units

__all__ = [
    "ReconstructionStack", "SimplifyStats", "SubstitutionEntry", "WitnessEntry",
    "bce_pass", "bve_pass", "distill_clause", "distill_pass", "is_blocked_on",
    "propagate_units", "reconstruct_model", "self_subsume_pass", "stamp",
    "strongly_connected", "subsume_pass", "try_eliminate", "unhide_round", "Stamps",
    "UNCHANGED", "STRENGTHENED", "REPLACED", "REMOVED",
]
