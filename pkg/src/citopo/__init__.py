"""Exact topological invariants of complete intersections: characteristic
class coefficients, classification criteria, and degree-space search."""

from ._core import IMPL_NAME as kernel_implementation
from .classify import ClassificationVerdict, classify_pair
from .invariants import (
    InvariantProfile,
    Multidegree,
    canonicalize,
    chern_coefficient,
    euler_characteristic,
    pontrjagin_coefficient,
    power_sums,
    profile,
    total_degree,
)
from .newton import IntegralityError, newton_g
from .search import KeyMode, SearchConfig, match_key, search_pairs, verify_known_pair

__version__ = "0.1.0"

__all__ = [
    "ClassificationVerdict",
    "IntegralityError",
    "InvariantProfile",
    "KeyMode",
    "Multidegree",
    "SearchConfig",
    "canonicalize",
    "chern_coefficient",
    "classify_pair",
    "euler_characteristic",
    "kernel_implementation",
    "match_key",
    "newton_g",
    "pontrjagin_coefficient",
    "power_sums",
    "profile",
    "search_pairs",
    "total_degree",
    "verify_known_pair",
]
