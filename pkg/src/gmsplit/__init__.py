"""Standard Heegaard splitting constructions for (generalized) graph manifolds."""

from .assembly import (
    Bounds,
    CandidateSplitting,
    GeneralizedSplitting,
    amalgamate,
    assemble,
    cut_edge,
    enumerate_standard,
    weak_reduction_pipeline,
)
from .errors import GMSplitError
from .model import (
    GraphManifoldSpec,
    dumps,
    euler_char_base,
    loads,
    orbifold_euler_char,
    product,
    seifert,
    validate,
)
from .slopes import Slope, intersection_number, transport_slope

__all__ = [
    "Bounds",
    "CandidateSplitting",
    "GMSplitError",
    "GeneralizedSplitting",
    "GraphManifoldSpec",
    "Slope",
    "amalgamate",
    "assemble",
    "cut_edge",
    "dumps",
    "enumerate_standard",
    "euler_char_base",
    "intersection_number",
    "loads",
    "orbifold_euler_char",
    "product",
    "seifert",
    "transport_slope",
    "validate",
    "weak_reduction_pipeline",
]
