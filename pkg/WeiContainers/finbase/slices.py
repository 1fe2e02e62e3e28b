"""
Families over a base: the slice calculus ``Σ_f ⊣ f* ⊣ Π_f`` on finite sets.
"""
import typing as t
import itertools as it
from dataclasses import dataclass

from frozendict import frozendict

from .sets import FinSetObj, FinMap, compose
from .limits import pullback, PullbackResult
from .labels import section_label, pair_label
from ..errors import BaseMismatch


@dataclass(frozen=True)
class SliceObj:
    total: 'FinSetObj'
    base: 'FinSetObj'
    map: 'FinMap'

    def __post_init__(self):
        if self.map.dom != self.total or self.map.cod != self.base:
            raise BaseMismatch(f"Slice map {self.map} is not typed {self.total} → {self.base}")

    @classmethod
    def of(cls, f: 'FinMap') -> 'SliceObj':
        return cls(f.dom, f.cod, f)

    def fiber(self, i: 'str') -> 'tuple[str, ...]':
        return self.map.fiber(i)


def sigma_along(f: 'FinMap', a: 'SliceObj') -> 'SliceObj':
    if a.base != f.dom:
        raise BaseMismatch(f"Slice over {a.base} cannot be pushed along a map out of {f.dom}")
    return SliceObj(a.total, f.cod, compose(f, a.map))

def reindex_pullback(f: 'FinMap', b: 'SliceObj') -> 'PullbackResult':
    if b.base != f.cod:
        raise BaseMismatch(f"Slice over {b.base} cannot be reindexed along a map into {f.cod}")
    return pullback(f, b.map)

def reindex(f: 'FinMap', b: 'SliceObj') -> 'SliceObj':
    pb = reindex_pullback(f, b)
    return SliceObj(pb.apex, f.dom, pb.proj1)

def sections(f: 'FinMap', a: 'SliceObj') -> 'dict[str, dict[str, frozendict[str, str]]]':
    """For every ``j``, the sections of ``a`` over ``f⁻¹(j)`` keyed by their label."""
    if a.base != f.dom:
        raise BaseMismatch(f"Slice over {a.base} does not live over the domain {f.dom}")

    ret = {}
    for j, preimage in f.fibers().items():
        choices = [a.fiber(i) for i in preimage]
        ret[j] = {}
        for picked in it.product(*choices):
            graph = frozendict(zip(preimage, picked))
            ret[j][section_label(j, graph)] = graph
    return ret

def pi_along(f: 'FinMap', a: 'SliceObj') -> 'SliceObj':
    by_base = sections(f, a)
    graph = {label: j for j, secs in by_base.items() for label in secs}
    total = FinSetObj(tuple(graph))
    return SliceObj(total, f.cod, FinMap(total, f.cod, graph))


def slice_homs(a: 'SliceObj', b: 'SliceObj') -> 't.Iterator[FinMap]':
    """Every map ``a.total → b.total`` over the common base."""
    if a.base != b.base:
        raise BaseMismatch(f"Slices over {a.base} and {b.base} have no maps between them")

    choices = [b.fiber(a.map.graph[x]) for x in a.total]
    for picked in it.product(*choices):
        yield FinMap(a.total, b.total, dict(zip(a.total.elements, picked)))

def sigma_transpose(f: 'FinMap', a: 'SliceObj', b: 'SliceObj', h: 'FinMap') -> 'FinMap':
    """``Hom_J(Σ_f a, b) → Hom_I(a, f* b)``"""
    pb = reindex_pullback(f, b)
    return FinMap(a.total, pb.apex, {x: pair_label(a.map.graph[x], h.graph[x]) for x in a.total})

def pi_transpose(f: 'FinMap', g: 'SliceObj', a: 'SliceObj', h: 'FinMap') -> 'FinMap':
    """``Hom_I(f* g, a) → Hom_J(g, Π_f a)``"""
    reindex_pullback(f, g)
    fibers = f.fibers()

    graph = {}
    for y in g.total:
        j = g.map.graph[y]
        section = {i: h.graph[pair_label(i, y)] for i in fibers[j]}
        graph[y] = section_label(j, section)

    return FinMap(g.total, pi_along(f, a).total, graph)
