from .category import BaseCategory, FinSetCategory, PasmCategory, FINSET, PASM, category_of
from .container import (
    Container, make_container, from_fibers, identity_container, initial_container,
    terminal_container, require_same_kind,
)
from .morphism import (
    MorphismRep, Morphism, check_rep, validate_rep, normalize, build_morphism, canonical_pullback,
    identity_morphism, compose_morphisms, reindex_container, horizontal, vertical, factorize,
)
from .search import (
    is_answerable, fiber_profile, is_isomorphic, SearchResult, search_morphism, find_morphism,
    enumerate_morphisms,
)

__all__ = [
    "BaseCategory", "FinSetCategory", "PasmCategory", "FINSET", "PASM", "category_of",
    "Container", "make_container", "from_fibers", "identity_container", "initial_container",
    "terminal_container", "require_same_kind",
    "MorphismRep", "Morphism", "check_rep", "validate_rep", "normalize", "build_morphism",
    "canonical_pullback", "identity_morphism", "compose_morphisms", "reindex_container",
    "horizontal", "vertical", "factorize",
    "is_answerable", "fiber_profile", "is_isomorphic", "SearchResult", "search_morphism",
    "find_morphism", "enumerate_morphisms",
]
