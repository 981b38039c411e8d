"""Cocyclic Hadamard matrices over Z_t x Z_2^2: assembly, tests, operations, orbits, search."""

from .cocycle import AssemblyConvention, CoboundarySet, assemble, basis_expression, canonical_key
from .group import GroupElement, GroupParams
from .hadamard import is_hadamard, is_hadamard_set
from .orbits import OrbitRecord, total_orbit

__version__ = "0.1.0"

__all__ = [
    "AssemblyConvention",
    "CoboundarySet",
    "GroupElement",
    "GroupParams",
    "OrbitRecord",
    "assemble",
    "basis_expression",
    "canonical_key",
    "is_hadamard",
    "is_hadamard_set",
    "total_orbit",
]
