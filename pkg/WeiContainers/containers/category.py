"""
The two base categories containers live over.

Both expose the same toolkit on their own objects and morphisms, so the
container constructions are written once. Carrier-level data is always a
``FinMap``; the PAsm side additionally needs a code for every map it builds,
which callers pass alongside and which is verified on construction.
"""
import typing as t
from abc import ABC, abstractmethod

from ..finbase import FinSetObj, FinMap
from ..finbase import limits as fl
from ..finbase import sets as fs
from ..assemblies import PartitionedAssembly, TrackedMap
from ..assemblies import limits as al
from ..assemblies import tracking as at
from ..assemblies.assembly import as_partitioned
from ..pca import Term, EvalBudget
from ..errors import UnverifiedTracking

O = t.TypeVar("O")
M = t.TypeVar("M")

KIND = t.Literal["finset", "pasm"]


class BaseCategory(t.Generic[O, M], ABC):
    kind: 'KIND'

    @abstractmethod
    def carrier(self, obj: 'O') -> 'FinSetObj': ...

    def underlying(self, m: 'M') -> 'FinMap':
        return m if isinstance(m, FinMap) else m.fn

    @abstractmethod
    def dom(self, m: 'M') -> 'O': ...

    @abstractmethod
    def cod(self, m: 'M') -> 'O': ...

    @abstractmethod
    def morphism(self, dom: 'O', cod: 'O', fn: 'FinMap', code: 't.Optional[Term]' = None) -> 'M':
        """Lift a carrier map; the PAsm side verifies ``code`` against it."""

    @abstractmethod
    def is_morphism(self, m: 'M', budget: 'EvalBudget' = None) -> 'bool': ...

    @abstractmethod
    def identity(self, obj: 'O') -> 'M': ...

    @abstractmethod
    def compose(self, g: 'M', f: 'M') -> 'M': ...

    @abstractmethod
    def pullback(self, f: 'M', g: 'M') -> 't.Any':
        """A result with ``apex``, ``proj1``, ``proj2``, ``left`` and ``right``."""

    @abstractmethod
    def mediating(self, pb, alpha: 'M', beta: 'M') -> 'M': ...

    @abstractmethod
    def terminal(self) -> 'O': ...

    @abstractmethod
    def initial(self) -> 'O': ...

    @abstractmethod
    def terminal_map(self, obj: 'O') -> 'M': ...

    @abstractmethod
    def initial_map(self, obj: 'O') -> 'M': ...

    @abstractmethod
    def product(self, a: 'O', b: 'O') -> 'O': ...

    @abstractmethod
    def coproduct(self, a: 'O', b: 'O') -> 'O': ...

    @abstractmethod
    def product_map(self, f: 'M', g: 'M') -> 'M': ...

    @abstractmethod
    def coproduct_map(self, f: 'M', g: 'M') -> 'M': ...

    @abstractmethod
    def copairing(self, f: 'M', g: 'M') -> 'M': ...

    def same(self, a: 'O', b: 'O') -> 'bool':
        return a == b


class FinSetCategory(BaseCategory[FinSetObj, FinMap]):
    kind = "finset"

    def carrier(self, obj):
        return obj

    def dom(self, m):
        return m.dom

    def cod(self, m):
        return m.cod

    def morphism(self, dom, cod, fn, code=None):
        if fn.dom != dom or fn.cod != cod:
            return FinMap(dom, cod, fn.graph)
        return fn

    def is_morphism(self, m, budget=None):
        return isinstance(m, FinMap)

    def identity(self, obj):
        return fs.identity(obj)

    def compose(self, g, f):
        return fs.compose(g, f)

    def pullback(self, f, g):
        return fl.pullback(f, g)

    def mediating(self, pb, alpha, beta):
        return fl.mediating(pb, alpha, beta)

    def terminal(self):
        return fl.terminal()

    def initial(self):
        return fl.initial()

    def terminal_map(self, obj):
        return fl.terminal_map(obj)

    def initial_map(self, obj):
        return fl.initial_map(obj)

    def product(self, a, b):
        return fl.product(a, b).obj

    def coproduct(self, a, b):
        return fl.coproduct(a, b).obj

    def product_map(self, f, g):
        return fl.product_map(f, g)

    def coproduct_map(self, f, g):
        return fl.coproduct_map(f, g)

    def copairing(self, f, g):
        return fl.copairing(f, g)


class PasmCategory(BaseCategory[PartitionedAssembly, TrackedMap]):
    kind = "pasm"

    def carrier(self, obj):
        return obj.carrier

    def dom(self, m):
        return m.src

    def cod(self, m):
        return m.dst

    def morphism(self, dom, cod, fn, code=None, budget=None):
        if code is None:
            raise UnverifiedTracking(f"A code is required to lift {fn} to assemblies")
        if fn.dom != dom.carrier or fn.cod != cod.carrier:
            fn = FinMap(dom.carrier, cod.carrier, fn.graph)
        return at.track(dom, cod, fn, code, budget)

    def is_morphism(self, m, budget=None):
        if not isinstance(m, TrackedMap):
            return False
        return m.verified or at.verify_tracking(m.src, m.dst, m.fn, m.code, budget or m.budget)

    def identity(self, obj):
        return at.identity_tracked(obj)

    def compose(self, g, f):
        return at.compose_tracked(g, f)

    def pullback(self, f, g):
        return al.pasm_pullback(f, g)

    def mediating(self, pb, alpha, beta):
        return al.pasm_mediating(pb, alpha, beta)

    def terminal(self):
        return al.terminal()

    def initial(self):
        return al.initial()

    def terminal_map(self, obj):
        return al.terminal_map(obj)

    def initial_map(self, obj):
        return al.initial_map(obj)

    def product(self, a, b):
        return al.product(as_partitioned(a), as_partitioned(b)).obj

    def coproduct(self, a, b):
        return al.coproduct(as_partitioned(a), as_partitioned(b)).obj

    def product_map(self, f, g):
        return al.product_map(f, g)

    def coproduct_map(self, f, g):
        return al.coproduct_map(f, g)

    def copairing(self, f, g):
        return al.copairing(f, g)


FINSET = FinSetCategory()
PASM = PasmCategory()

def category_of(kind: 'KIND') -> 'BaseCategory':
    if kind == "finset":
        return FINSET
    if kind == "pasm":
        return PASM
    raise ValueError(f"Unknown base category `{kind}`")
