"""Spectra and eigenvalue-bound audits for uniform hypergraphs."""

from .hypergraph import (
    Hypergraph,
    InvariantSet,
    binomial,
    complement,
    complete_bipartite_graph,
    complete_bipartite_uniform,
    complete_uniform,
    delete_edges,
    invariants,
    is_connected,
    random_connected_uniform,
    single_edge,
    validate,
)
from .eigen import Spectrum, SpectralSummary, eigenvalues, jacobi_eigenvalues, spectral_summary
from .bounds import (
    CATALOG,
    BoundEvaluation,
    BoundSpec,
    build_context,
    evaluate,
    evaluate_all,
    equality_consistency_report,
    evaluations_to_csv,
)
from .structure import StructureProfile, strong_chromatic_number, structure_profile, weak_independence_number

__all__ = [
    "Hypergraph",
    "InvariantSet",
    "Spectrum",
    "SpectralSummary",
    "StructureProfile",
    "BoundSpec",
    "BoundEvaluation",
    "CATALOG",
    "binomial",
    "validate",
    "invariants",
    "is_connected",
    "complement",
    "delete_edges",
    "complete_uniform",
    "single_edge",
    "complete_bipartite_graph",
    "complete_bipartite_uniform",
    "random_connected_uniform",
    "eigenvalues",
    "jacobi_eigenvalues",
    "spectral_summary",
    "build_context",
    "evaluate",
    "evaluate_all",
    "equality_consistency_report",
    "evaluations_to_csv",
    "strong_chromatic_number",
    "weak_independence_number",
    "structure_profile",
]

__version__ = "0.1.0"
