import typing as t
import logging
from dataclasses import dataclass

from .category import BaseCategory, FINSET, PASM, KIND
from ..finbase import FinSetObj, FinMap
from ..assemblies import Assembly, PartitionedAssembly, TrackedMap, is_partitioned
from ..assemblies.assembly import as_partitioned
from ..errors import IllTyped, UnverifiedTracking, KindMismatch

logger = logging.getLogger("WeiContainers")

BUNDLE = t.Union[FinMap, TrackedMap]


@dataclass(frozen=True)
class Container:
    """A bundle ``P : X → U``: positions ``U``, directions ``X`` and their fibers."""
    bundle: 'BUNDLE'

    def __post_init__(self):
        if isinstance(self.bundle, TrackedMap):
            if not self.bundle.verified:
                raise UnverifiedTracking(f"Bundle {self.bundle} has not been verified")
        elif not isinstance(self.bundle, FinMap):
            raise IllTyped(f"{self.bundle!r} is neither a finite map nor a tracked map")

    @property
    def kind(self) -> 'KIND':
        return "pasm" if isinstance(self.bundle, TrackedMap) else "finset"

    @property
    def category(self) -> 'BaseCategory':
        return PASM if self.kind == "pasm" else FINSET

    @property
    def total(self) -> 't.Union[FinSetObj, Assembly]':
        return self.category.dom(self.bundle)

    @property
    def base(self) -> 't.Union[FinSetObj, Assembly]':
        return self.category.cod(self.bundle)

    @property
    def map(self) -> 'FinMap':
        return self.category.underlying(self.bundle)

    @property
    def positions(self) -> 'FinSetObj':
        return self.map.cod

    @property
    def directions(self) -> 'FinSetObj':
        return self.map.dom

    def fiber(self, u: 'str') -> 'tuple[str, ...]':
        return self.map.fiber(u)

    def fibers(self) -> 'dict[str, tuple[str, ...]]':
        return self.map.fibers()

    def __str__(self):
        inner = ", ".join(f"{u}: [{', '.join(xs)}]" for u, xs in self.fibers().items())
        return f"{self.kind}{{{inner}}}"


def make_container(bundle: 'BUNDLE') -> 'Container':
    """
    Wrap a bundle. Assemblies in which every element has one realizer are
    stored as ``PartitionedAssembly`` so that equal data compares equal.
    """
    if isinstance(bundle, TrackedMap) and is_partitioned(bundle.src) and is_partitioned(bundle.dst):
        src, dst = as_partitioned(bundle.src), as_partitioned(bundle.dst)
        if src is not bundle.src or dst is not bundle.dst:
            bundle = TrackedMap(src, dst, bundle.fn, bundle.code, bundle.budget, bundle.verified)
    return Container(bundle)

def from_fibers(fibers: 't.Mapping[str, t.Iterable[str]]') -> 'Container':
    """A finite container from ``{position: [direction, ...]}``."""
    graph = {x: u for u, xs in fibers.items() for x in xs}
    return Container(FinMap(FinSetObj(tuple(graph)), FinSetObj(tuple(fibers)), graph))

def identity_container(obj: 't.Union[FinSetObj, Assembly]') -> 'Container':
    category = PASM if isinstance(obj, Assembly) else FINSET
    return make_container(category.identity(obj))

def initial_container(kind: 'KIND' = "finset") -> 'Container':
    """``0 → 0``"""
    category = PASM if kind == "pasm" else FINSET
    return make_container(category.initial_map(category.initial()))

def terminal_container(kind: 'KIND' = "finset") -> 'Container':
    """``0 → 1``"""
    category = PASM if kind == "pasm" else FINSET
    return make_container(category.initial_map(category.terminal()))

def require_same_kind(*containers: 'Container') -> 'BaseCategory':
    kinds = {c.kind for c in containers}
    if len(kinds) != 1:
        raise KindMismatch(f"Containers over different bases: {sorted(kinds)}")
    return containers[0].category
