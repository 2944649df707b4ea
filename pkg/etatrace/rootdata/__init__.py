"""
Root systems of simple Lie types, Weyl group action and weight diagrams.
"""

from .datum import (
    RootDatum,
    RootVector,
    Weight,
    WeightLike,
    as_weight,
    braid_exponent,
    build_root_datum,
    coxeter_action_on_weights,
    exponents,
    in_root_lattice,
    inner,
    killing_constant_from_roots,
    simple_reflection,
    weyl_group_order,
    weyl_orbit,
)
from .lie_types import Family, LieType, cartan_matrix, symmetrizers, tabulated_rg
from .weights import (
    c_lambda,
    casimir_exponent,
    coxeter_exponent,
    dominant_weights_up_to_dim,
    enumerate_contributing_weights,
    freudenthal_multiplicities,
    weyl_dim,
)

__all__ = [
    "Family",
    "LieType",
    "cartan_matrix",
    "symmetrizers",
    "tabulated_rg",
    "RootDatum",
    "RootVector",
    "Weight",
    "WeightLike",
    "as_weight",
    "build_root_datum",
    "inner",
    "in_root_lattice",
    "simple_reflection",
    "coxeter_action_on_weights",
    "weyl_orbit",
    "weyl_group_order",
    "exponents",
    "braid_exponent",
    "killing_constant_from_roots",
    "weyl_dim",
    "freudenthal_multiplicities",
    "casimir_exponent",
    "coxeter_exponent",
    "c_lambda",
    "enumerate_contributing_weights",
    "dominant_weights_up_to_dim",
]
