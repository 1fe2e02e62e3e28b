from .sets import (
    FinSetObj, FinMap, identity, compose, compose_all, all_maps,
    is_surjective, is_injective, is_bijection, inverse, restrict,
)
from .limits import (
    PullbackResult, ProductResult, CoproductResult, ExponentialResult,
    pullback, mediating, terminal, initial, terminal_map, initial_map,
    product, pairing, product_map, coproduct, copairing, coproduct_map,
    exponential, distributor, right_distributor, TERMINAL_LABEL,
)
from .slices import (
    SliceObj, sigma_along, reindex, reindex_pullback, pi_along, sections,
    slice_homs, sigma_transpose, pi_transpose,
)
from . import labels

__all__ = [
    "FinSetObj", "FinMap", "identity", "compose", "compose_all", "all_maps",
    "is_surjective", "is_injective", "is_bijection", "inverse", "restrict",
    "PullbackResult", "ProductResult", "CoproductResult", "ExponentialResult",
    "pullback", "mediating", "terminal", "initial", "terminal_map", "initial_map",
    "product", "pairing", "product_map", "coproduct", "copairing", "coproduct_map",
    "exponential", "distributor", "right_distributor", "TERMINAL_LABEL",
    "SliceObj", "sigma_along", "reindex", "reindex_pullback", "pi_along", "sections",
    "slice_homs", "sigma_transpose", "pi_transpose", "labels",
]
