"""Exact root systems, alcove facets and parahoric combinatorics."""

from .errors import AlcoveKitError, ConstructionError, DomainError, HypothesisError
from .rootsys import (
    Coweight,
    RootSystem,
    SimpleType,
    all_types,
    build_root_system,
    coroot_eval,
    extended_diagram,
    pairing,
    root_system,
)

__all__ = [
    "AlcoveKitError",
    "ConstructionError",
    "Coweight",
    "DomainError",
    "HypothesisError",
    "RootSystem",
    "SimpleType",
    "all_types",
    "build_root_system",
    "coroot_eval",
    "extended_diagram",
    "pairing",
    "root_system",
]
