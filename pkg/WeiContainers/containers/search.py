import typing as t
import logging
import itertools as it
from dataclasses import dataclass

from .container import Container, require_same_kind
from .morphism import Morphism, MorphismRep, build_morphism, canonical_pullback, normalize
from ..finbase import FinMap, all_maps, is_surjective
from ..finbase.labels import split_pair
from ..assemblies import search_tracking, track
from ..pca import EvalBudget, SND
from ..typing import DEFAULT_SETTINGS

logger = logging.getLogger("WeiContainers")


def is_answerable(p: 'Container') -> 'bool':
    """Every position has at least one direction."""
    return is_surjective(p.map)

def fiber_profile(p: 'Container') -> 'tuple[int, ...]':
    return tuple(sorted(len(xs) for xs in p.fibers().values()))

def is_isomorphic(p: 'Container', q: 'Container') -> 'bool':
    """Finite containers are isomorphic exactly when their fiber sizes agree as multisets."""
    require_same_kind(p, q)
    return fiber_profile(p) == fiber_profile(q)


@dataclass(frozen=True)
class SearchResult:
    morphism: 't.Optional[Morphism]'
    definitive: 'bool'
    bound: 't.Optional[int]' = None
    budget: 't.Optional[int]' = None

    @property
    def found(self) -> 'bool':
        return self.morphism is not None

    @property
    def verdict(self) -> 't.Literal["REDUCIBLE", "NOT-REDUCIBLE", "UNKNOWN-AT-BOUND"]':
        if self.found:
            return "REDUCIBLE"
        return "NOT-REDUCIBLE" if self.definitive else "UNKNOWN-AT-BOUND"


def _can_answer(p: 'Container', u: 'str', q: 'Container', v: 'str') -> 'bool':
    """Answers over ``v`` can be sent back to ``u``."""
    return not q.fiber(v) or bool(p.fiber(u))

def _find_finset(p: 'Container', q: 'Container') -> 't.Optional[Morphism]':
    # each position is handled on its own: pick the least target whose
    # answers can be sent back, then the least answer
    forward = {}
    for u in p.positions:
        for v in q.positions:
            if _can_answer(p, u, q, v):
                forward[u] = v
                break
        else:
            logger.debug(f"No position of the target can answer `{u}`")
            return None

    pb = canonical_pullback(q, FinMap(p.positions, q.positions, forward))
    backward = {c: p.fiber(split_pair(c)[0])[0] for c in pb.apex}
    return build_morphism(p, q, forward, backward)

def enumerate_morphisms(p: 'Container', q: 'Container') -> 't.Iterator[Morphism]':
    """Every morphism between finite containers, forward maps first."""
    require_same_kind(p, q)
    for forward in all_maps(p.positions, q.positions):
        pb = canonical_pullback(q, forward)
        apex = tuple(pb.apex)
        choices = [p.fiber(split_pair(c)[0]) for c in apex]
        for picked in it.product(*choices):
            yield build_morphism(p, q, forward, dict(zip(apex, picked)))


def _find_pasm(p: 'Container', q: 'Container', bound: 'int', budget: 'EvalBudget') -> 't.Optional[Morphism]':
    cat = p.category
    provenance = {"bound": bound, "budget": budget.max_steps}

    for forward_map in all_maps(p.positions, q.positions):
        forward_code = search_tracking(p.base, q.base, forward_map, bound, budget)
        if forward_code is None:
            continue

        forward = track(p.base, q.base, forward_map, forward_code, budget)
        pb = cat.pullback(forward, q.bundle)
        apex = tuple(pb.apex.carrier)
        choices = [p.fiber(split_pair(c)[0]) for c in apex]
        for picked in it.product(*choices):
            backward_map = FinMap(pb.apex.carrier, p.directions, dict(zip(apex, picked)))
            code = search_tracking(pb.apex, p.total, backward_map, bound, budget)
            if code is None:
                # answers often only depend on the direction half of the pair
                code = search_tracking(pb.apex, p.total, backward_map, bound, budget, precompose=SND)
            if code is None:
                continue

            backward = track(pb.apex, p.total, backward_map, code, budget + budget)
            logger.debug(f"Found a morphism with forward {forward_map} and backward {backward_map}")
            return normalize(MorphismRep(p, q, forward, backward), provenance=provenance)

    logger.debug(f"No morphism found with codes of size <= {bound}")
    return None

def search_morphism(
    p: 'Container',
    q: 'Container',
    bound: 'int' = None,
    budget: 'EvalBudget' = None,
) -> 'SearchResult':
    cat = require_same_kind(p, q)
    if cat.kind == "finset":
        return SearchResult(_find_finset(p, q), True)

    bound = DEFAULT_SETTINGS["bound"] if bound is None else bound
    budget = budget or EvalBudget()
    return SearchResult(_find_pasm(p, q, bound, budget), False, bound, budget.max_steps)

def find_morphism(
    p: 'Container',
    q: 'Container',
    bound: 'int' = None,
    budget: 'EvalBudget' = None,
) -> 't.Optional[Morphism]':
    """
    A morphism ``p → q`` or ``None``. Over finite sets ``None`` is definitive;
    over assemblies it only means no tracking codes of size ``≤ bound`` were found.
    """
    return search_morphism(p, q, bound, budget).morphism
