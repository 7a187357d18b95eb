"""Exact computations for twisted conjugation: folding, filtrations, pairings."""

from .laurent import GroupAlgebraElement
from .rootdata import RootDatum, build_root_datum
from .twist import PinnedAutomorphism, fold, sigma_orbits, validate_automorphism
from .repn import HighestWeightModule, build_irreducible

__all__ = [
    "GroupAlgebraElement",
    "HighestWeightModule",
    "PinnedAutomorphism",
    "RootDatum",
    "build_irreducible",
    "build_root_datum",
    "fold",
    "sigma_orbits",
    "validate_automorphism",
]
