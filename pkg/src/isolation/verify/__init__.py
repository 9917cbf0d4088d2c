from .checks import CHECKS, SWEEP_CHECKS, CheckSpec, GraphFacts
from .enumeration import MAX_ORDER, canonical_mask, canonical_masks, enumerate_graphs, graph_from_mask, mask_of
from .models import CheckTally, Outcome, SweepResult, Violation
from .probe import ProbeRow, ProbeTable, open_problem_probe
from .sample import SAMPLERS, sample_verify
from .sweep import make_chunks, merge_results, resolve_checks, run_chunk, sweep_theorems

__all__ = [
    "CHECKS",
    "MAX_ORDER",
    "SAMPLERS",
    "SWEEP_CHECKS",
    "CheckSpec",
    "CheckTally",
    "GraphFacts",
    "Outcome",
    "ProbeRow",
    "ProbeTable",
    "SweepResult",
    "Violation",
    "canonical_mask",
    "canonical_masks",
    "enumerate_graphs",
    "graph_from_mask",
    "make_chunks",
    "mask_of",
    "merge_results",
    "open_problem_probe",
    "resolve_checks",
    "run_chunk",
    "sample_verify",
    "sweep_theorems",
]
