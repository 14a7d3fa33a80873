"""Positive diagrams over reduced words in finite Weyl groups."""

from ._core import (
    DomainError,
    ParseError,
    SizeCapError,
    WeylDiagError,
    census,
    diagram_for,
    enumerate_positive,
    extend_to_w0,
    group_order,
    interval_size,
    is_le_diagram,
    is_positive,
    is_reduced,
    pipe_dream_permutation,
    positive_roots,
    quantum_matrices_word,
    render_wiring,
    root_sequence,
    run_cli,
    verify_json,
    zeta,
)

__all__ = [
    "DomainError",
    "ParseError",
    "SizeCapError",
    "WeylDiagError",
    "census",
    "diagram_for",
    "enumerate_positive",
    "extend_to_w0",
    "group_order",
    "interval_size",
    "is_le_diagram",
    "is_positive",
    "is_reduced",
    "pipe_dream_permutation",
    "positive_roots",
    "quantum_matrices_word",
    "render_wiring",
    "root_sequence",
    "run_cli",
    "verify_json",
    "zeta",
]
