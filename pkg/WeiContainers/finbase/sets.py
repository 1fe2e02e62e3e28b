import typing as t
import itertools as it
from dataclasses import dataclass, field

from frozendict import frozendict

from .labels import is_balanced, label_key
from ..errors import CodDomMismatch, DuplicateLabel, IllTyped


@dataclass(frozen=True)
class FinSetObj:
    """A finite set of opaque string labels, kept in canonical (sorted) order."""
    elements: 'tuple[str, ...]' = ()
    _index: 'frozenset[str]' = field(default=frozenset(), init=False, repr=False, compare=False)

    def __post_init__(self):
        for label in self.elements:
            if not isinstance(label, str) or not label or not is_balanced(label):
                raise ValueError(f"`{label!r}` is not a valid label")
        elements = tuple(sorted(self.elements, key=label_key))
        for a, b in zip(elements, elements[1:]):
            if a == b:
                raise DuplicateLabel(f"Label `{a}` occurs twice")

        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_index", frozenset(elements))

    @classmethod
    def of(cls, *labels: 'str') -> 'FinSetObj':
        return cls(tuple(labels))

    def __contains__(self, label) -> 'bool':
        return label in self._index

    def __iter__(self) -> 't.Iterator[str]':
        return iter(self.elements)

    def __len__(self) -> 'int':
        return len(self.elements)

    def __str__(self):
        return "{" + ", ".join(self.elements) + "}"


@dataclass(frozen=True)
class FinMap:
    dom: 'FinSetObj'
    cod: 'FinSetObj'
    graph: 'frozendict[str, str]'

    def __post_init__(self):
        graph = self.graph if isinstance(self.graph, frozendict) else frozendict(self.graph)
        object.__setattr__(self, "graph", graph)

        if set(graph) != set(self.dom.elements):
            raise IllTyped(f"Graph keys {sorted(graph)} differ from domain {list(self.dom)}")
        for a, b in graph.items():
            if b not in self.cod:
                raise IllTyped(f"`{a}` is sent to `{b}` which is outside the codomain {self.cod}")

    @classmethod
    def from_function(cls, dom: 'FinSetObj', cod: 'FinSetObj', fn: 't.Callable[[str], str]') -> 'FinMap':
        return cls(dom, cod, frozendict({a: fn(a) for a in dom}))

    def __call__(self, label: 'str') -> 'str':
        return self.graph[label]

    def image(self) -> 'frozenset[str]':
        return frozenset(self.graph.values())

    def fiber(self, b: 'str') -> 'tuple[str, ...]':
        return tuple(a for a in self.dom if self.graph[a] == b)

    def fibers(self) -> 'dict[str, tuple[str, ...]]':
        ret = {b: [] for b in self.cod}
        for a in self.dom:
            ret[self.graph[a]].append(a)
        return {b: tuple(v) for b, v in ret.items()}

    def __str__(self):
        return "{" + ", ".join(f"{a}↦{self.graph[a]}" for a in self.dom) + "}"


def identity(a: 'FinSetObj') -> 'FinMap':
    return FinMap(a, a, frozendict({x: x for x in a}))

def compose(g: 'FinMap', f: 'FinMap') -> 'FinMap':
    """``g ∘ f``"""
    if f.cod != g.dom:
        raise CodDomMismatch(f"Cannot compose: codomain {f.cod} is not domain {g.dom}")
    return FinMap(f.dom, g.cod, frozendict({a: g.graph[f.graph[a]] for a in f.dom}))

def compose_all(*maps: 'FinMap') -> 'FinMap':
    """``compose_all(h, g, f) = h ∘ g ∘ f``"""
    ret = maps[-1]
    for m in reversed(maps[:-1]):
        ret = compose(m, ret)
    return ret

def all_maps(a: 'FinSetObj', b: 'FinSetObj') -> 't.Iterator[FinMap]':
    """Every map ``a → b``, lexicographically by the tuple of values."""
    for values in it.product(b.elements, repeat=len(a)):
        yield FinMap(a, b, frozendict(zip(a.elements, values)))

def is_surjective(f: 'FinMap') -> 'bool':
    return f.image() == frozenset(f.cod.elements)

def is_injective(f: 'FinMap') -> 'bool':
    return len(f.image()) == len(f.dom)

def is_bijection(f: 'FinMap') -> 'bool':
    return len(f.dom) == len(f.cod) and is_surjective(f)

def inverse(f: 'FinMap') -> 'FinMap':
    if not is_bijection(f):
        raise ValueError(f"{f} is not a bijection")
    return FinMap(f.cod, f.dom, frozendict({b: a for a, b in f.graph.items()}))

def restrict(f: 'FinMap', dom: 'FinSetObj') -> 'FinMap':
    return FinMap(dom, f.cod, frozendict({a: f.graph[a] for a in dom}))
