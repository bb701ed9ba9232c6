"""Tropical Plücker bases, weakly separated collections, generalized tilings and wirings."""

from .sets import (
    Collection,
    PluckerError,
    SeparatorChain,
    SubsetN,
    co_standard,
    is_largest_ws,
    is_ws_collection,
    prec,
    project,
    restore_from_projection,
    rhd,
    separator,
    standard,
    straight_extension,
    strongly_separated,
    weakly_separated,
)
from .tiling import GTiling, Tile, from_spectrum, reverse, standard_tiling, validate
from .tropical import TPFunction, descend_to_standard, extend_from_basis, extend_from_intervals
from .wiring import Wiring, tiling_to_wiring, wiring_to_tiling

__version__ = "0.1.0"

__all__ = [
    "Collection", "PluckerError", "SeparatorChain", "SubsetN", "co_standard", "is_largest_ws",
    "is_ws_collection", "prec", "project", "restore_from_projection", "rhd", "separator", "standard",
    "straight_extension", "strongly_separated", "weakly_separated", "GTiling", "Tile", "from_spectrum",
    "reverse", "standard_tiling", "validate", "TPFunction", "descend_to_standard", "extend_from_basis",
    "extend_from_intervals", "Wiring", "tiling_to_wiring", "wiring_to_tiling",
]
