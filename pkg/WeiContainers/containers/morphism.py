import typing as t
import logging
from dataclasses import dataclass, field

from frozendict import frozendict

from .category import BaseCategory
from .container import Container, make_container, require_same_kind
from ..finbase import FinMap, compose, is_bijection, inverse
from ..finbase import limits as fl
from ..assemblies import track
from ..pca import Term, EvalBudget, IDENT
from ..errors import InvalidRep, TypeMismatch, SquareDoesNotCommute

logger = logging.getLogger("WeiContainers")

MAP_LIKE = t.Union[FinMap, t.Mapping[str, str], t.Callable[[str], str]]


@dataclass(frozen=True)
class MorphismRep:
    """
    A forward map on positions and a backward map out of a pullback apex.

    When ``apex_base``/``apex_total`` are omitted the apex is the canonical
    pullback of ``dst.bundle`` along ``forward``.
    """
    src: 'Container'
    dst: 'Container'
    forward: 't.Any'
    backward: 't.Any'
    apex_base: 't.Any' = None
    apex_total: 't.Any' = None


@dataclass(frozen=True)
class Morphism:
    src: 'Container'
    dst: 'Container'
    forward: 't.Any'
    backward: 't.Any'
    provenance: 'frozendict' = field(default=frozendict(), compare=False)

    @property
    def category(self) -> 'BaseCategory':
        return self.src.category

    @property
    def forward_map(self) -> 'FinMap':
        return self.category.underlying(self.forward)

    @property
    def backward_map(self) -> 'FinMap':
        return self.category.underlying(self.backward)

    def apex(self):
        return canonical_pullback(self.dst, self.forward)

    @property
    def is_vertical(self) -> 'bool':
        return self.src.base == self.dst.base and self.forward == self.category.identity(self.src.base)

    def __str__(self):
        return f"forward {self.forward_map}, backward {self.backward_map}"


def canonical_pullback(dst: 'Container', forward):
    return dst.category.pullback(forward, dst.bundle)


def check_rep(r: 'MorphismRep', budget: 'EvalBudget' = None) -> 'list[str]':
    """Every violated condition, as a message; empty when ``r`` is valid."""
    if r.src.kind != r.dst.kind:
        return [f"Containers over different bases: {r.src.kind} and {r.dst.kind}"]

    cat = r.src.category
    for name, m in (("forward", r.forward), ("backward", r.backward)):
        if not cat.is_morphism(m, budget):
            return [f"The {name} map is not a morphism of the base category"]

    if cat.dom(r.forward) != r.src.base or cat.cod(r.forward) != r.dst.base:
        return ["The forward map does not go between the positions"]

    try:
        pb = canonical_pullback(r.dst, r.forward)
    except ValueError as e:
        return [f"Cannot form the canonical pullback: {e}"]

    q1 = pb.proj1
    errors = []
    if r.apex_base is not None or r.apex_total is not None:
        errors.extend(_check_apex(cat, r, pb))
        q1 = r.apex_base
    elif cat.dom(r.backward) != pb.apex:
        errors.append("The backward map is not defined on the canonical pullback")

    if errors:
        return errors

    if cat.cod(r.backward) != r.src.total:
        return ["The backward map does not land in the directions of the source"]

    triangle = compose(r.src.map, cat.underlying(r.backward))
    if triangle != cat.underlying(q1):
        wrong = [a for a in triangle.dom if triangle(a) != cat.underlying(q1)(a)]
        errors.append(f"The backward map leaves the fiber at {wrong}")
    return errors

def _check_apex(cat: 'BaseCategory', r: 'MorphismRep', pb) -> 'list[str]':
    if r.apex_base is None or r.apex_total is None:
        return ["Both apex projections are required"]

    apex = cat.dom(r.apex_base)
    if cat.dom(r.apex_total) != apex or cat.dom(r.backward) != apex:
        return ["The apex projections and the backward map disagree on the apex"]
    if cat.cod(r.apex_base) != r.src.base or cat.cod(r.apex_total) != r.dst.total:
        return ["The apex projections are mistyped"]

    theta = _comparison(cat, r, pb)
    if theta is None:
        return ["The apex square does not commute"]
    if not is_bijection(theta):
        return ["The apex is not a pullback: its comparison with the canonical apex is not a bijection"]

    if cat.kind == "pasm":
        for a in apex.carrier:
            if apex.realizers[a] != pb.apex.realizers[theta(a)]:
                return [f"The apex realizes `{a}` differently from the canonical pullback"]
    return []

def _comparison(cat: 'BaseCategory', r: 'MorphismRep', pb) -> 't.Optional[FinMap]':
    fin = fl.PullbackResult(
        cat.carrier(pb.apex), cat.underlying(pb.proj1), cat.underlying(pb.proj2),
        cat.underlying(pb.left), cat.underlying(pb.right),
    )
    try:
        return fl.mediating(fin, cat.underlying(r.apex_total), cat.underlying(r.apex_base))
    except SquareDoesNotCommute:
        return None

def validate_rep(r: 'MorphismRep', budget: 'EvalBudget' = None) -> 'bool':
    errors = check_rep(r, budget)
    for error in errors:
        logger.debug(f"Invalid morphism representative: {error}")
    return not errors


def normalize(r: 'MorphismRep', budget: 'EvalBudget' = None, provenance: 't.Mapping' = None) -> 'Morphism':
    """Re-express the backward map on the canonical apex."""
    errors = check_rep(r, budget)
    if errors:
        raise InvalidRep(errors[0])

    cat = r.src.category
    backward = r.backward
    if r.apex_base is not None:
        pb = canonical_pullback(r.dst, r.forward)
        theta_inv = inverse(_comparison(cat, r, pb))
        if cat.kind == "pasm":
            # the comparison preserves realizers, so the identity code tracks it
            back = track(pb.apex, cat.dom(r.backward), theta_inv, IDENT)
            backward = cat.compose(r.backward, back)
        else:
            backward = compose(r.backward, theta_inv)

    return Morphism(r.src, r.dst, r.forward, backward, frozendict(provenance or {}))

def build_morphism(
    src: 'Container',
    dst: 'Container',
    forward: 'MAP_LIKE',
    backward: 'MAP_LIKE',
    forward_code: 't.Optional[Term]' = None,
    backward_code: 't.Optional[Term]' = None,
    budget: 'EvalBudget' = None,
) -> 'Morphism':
    """A morphism from carrier maps, the backward one given on the canonical apex."""
    cat = require_same_kind(src, dst)
    forward_map = _as_map(forward, src.positions, dst.positions)
    fwd = _lift(cat, src.base, dst.base, forward_map, forward_code, budget)

    pb = canonical_pullback(dst, fwd)
    backward_map = _as_map(backward, cat.carrier(pb.apex), src.directions)
    bwd = _lift(cat, pb.apex, src.total, backward_map, backward_code, budget)
    return normalize(MorphismRep(src, dst, fwd, bwd), budget)

def _as_map(m, dom, cod) -> 'FinMap':
    if isinstance(m, FinMap):
        return m
    if isinstance(m, t.Mapping):
        return FinMap(dom, cod, m)
    return FinMap.from_function(dom, cod, m)

def _lift(cat, dom, cod, fn, code, budget):
    if cat.kind == "pasm":
        return cat.morphism(dom, cod, fn, code, budget)
    return cat.morphism(dom, cod, fn)


def identity_morphism(p: 'Container') -> 'Morphism':
    cat = p.category
    forward = cat.identity(p.base)
    pb = canonical_pullback(p, forward)
    return Morphism(p, p, forward, pb.proj2)

def compose_morphisms(m2: 'Morphism', m1: 'Morphism') -> 'Morphism':
    """
    ``m2 ∘ m1`` for ``m1: P → Q`` and ``m2: Q → R``: the forward maps compose,
    and a direction over ``(u, z)`` is sent through ``m2``'s backward map and
    then ``m1``'s.
    """
    if m1.dst != m2.src:
        raise TypeMismatch(f"Cannot compose: {m1.dst} is not {m2.src}")

    cat = m1.category
    forward = cat.compose(m2.forward, m1.forward)
    pb = canonical_pullback(m2.dst, forward)
    pb_qr = canonical_pullback(m2.dst, m2.forward)
    pb_pq = canonical_pullback(m1.dst, m1.forward)

    to_qr = cat.mediating(pb_qr, pb.proj2, cat.compose(m1.forward, pb.proj1))
    y = cat.compose(m2.backward, to_qr)
    to_pq = cat.mediating(pb_pq, y, pb.proj1)
    backward = cat.compose(m1.backward, to_pq)

    return Morphism(m1.src, m2.dst, forward, backward)


def reindex_container(forward, q: 'Container') -> 'Container':
    """The pullback of ``q`` along a map into its positions, as a container."""
    return make_container(canonical_pullback(q, forward).proj1)

def horizontal(forward, q: 'Container') -> 'Morphism':
    """``forward* Q → Q`` with the identity as backward map."""
    p = reindex_container(forward, q)
    return Morphism(p, q, forward, p.category.identity(p.total))

def vertical(p: 'Container', q: 'Container', backward) -> 'Morphism':
    """A morphism over the identity on positions given by ``backward: Y → X``."""
    cat = require_same_kind(p, q)
    forward = cat.identity(p.base)
    pb = canonical_pullback(q, forward)
    return normalize(MorphismRep(p, q, forward, cat.compose(backward, pb.proj2)))

def factorize(m: 'Morphism') -> 'tuple[Morphism, Morphism]':
    """``m = compose_morphisms(h, v)`` with ``h`` horizontal and ``v`` vertical."""
    h = horizontal(m.forward, m.dst)
    v = vertical(m.src, h.src, m.backward)
    return h, v
