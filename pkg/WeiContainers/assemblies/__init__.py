from .assembly import Assembly, PartitionedAssembly, is_modest, is_partitioned, as_partitioned, nabla, sort_terms
from .tracking import (
    TrackedMap, check_tracking, verify_tracking, track, identity_tracked, compose_tracked,
    tracking_obstructed, search_tracking, regular_epi_check, projective_cover,
)
from .limits import (
    PasmPullbackResult, PasmProductResult, PasmCoproductResult, pasm_pullback, pasm_mediating,
    terminal, initial, terminal_map, initial_map, product, pairing, product_map,
    coproduct, copairing, coproduct_map, pasm_distributor, pasm_right_distributor,
)

__all__ = [
    "Assembly", "PartitionedAssembly", "is_modest", "is_partitioned", "as_partitioned", "nabla",
    "sort_terms", "TrackedMap", "check_tracking", "verify_tracking", "track", "identity_tracked",
    "compose_tracked", "tracking_obstructed", "search_tracking", "regular_epi_check",
    "projective_cover", "PasmPullbackResult", "PasmProductResult", "PasmCoproductResult",
    "pasm_pullback", "pasm_mediating", "terminal", "initial", "terminal_map", "initial_map",
    "product", "pairing", "product_map", "coproduct", "copairing", "coproduct_map",
    "pasm_distributor", "pasm_right_distributor",
]
