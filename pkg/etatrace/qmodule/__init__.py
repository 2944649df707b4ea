"""
Irreducible highest-weight modules of U_q(g) and U(g) as exact sparse matrices.
"""

from .builder import DEFAULT_SIZE_LIMIT, check_size
from .module import (
    ClassicalModule,
    IrrModule,
    WeightModule,
    build_classical_module,
    build_module,
    module_from_dict,
    weight_space_indices,
)
from .registry import CACHE_FORMAT_VERSION, ModuleRegistry, default_registry
from .relations import verify_classical_relations, verify_module_relations

__all__ = [
    "DEFAULT_SIZE_LIMIT",
    "check_size",
    "WeightModule",
    "IrrModule",
    "ClassicalModule",
    "build_module",
    "build_classical_module",
    "module_from_dict",
    "weight_space_indices",
    "verify_module_relations",
    "verify_classical_relations",
    "ModuleRegistry",
    "default_registry",
    "CACHE_FORMAT_VERSION",
]
