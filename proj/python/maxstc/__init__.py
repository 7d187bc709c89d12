"""Exact maximum strong triadic closure solvers (C++ core)."""

from ._core import (
    ContractViolation,
    Graph,
    InputError,
    UnsupportedError,
    WrongClassError,
    certify_reduction,
    incompat_graph,
    random_bipartite,
    random_proper_interval,
    random_trivially_perfect,
    recognize_proper_interval,
    solve,
    stc_reduction,
    twin_classes,
    validate,
)

__all__ = [
    "ContractViolation",
    "Graph",
    "InputError",
    "UnsupportedError",
    "WrongClassError",
    "certify_reduction",
    "incompat_graph",
    "random_bipartite",
    "random_proper_interval",
    "random_trivially_perfect",
    "recognize_proper_interval",
    "solve",
    "stc_reduction",
    "twin_classes",
    "validate",
]
