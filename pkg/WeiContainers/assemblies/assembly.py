import typing as t
from dataclasses import dataclass

from frozendict import frozendict

from ..finbase import FinSetObj
from ..pca import Term, is_normal, underline
from ..errors import IllTyped


def sort_terms(terms: 't.Iterable[Term]') -> 'tuple[Term, ...]':
    return tuple(sorted(terms, key=lambda term: (term.size, str(term))))


@dataclass(frozen=True)
class Assembly:
    """A finite carrier with a finite, nonempty set of normal-form realizers per element."""
    carrier: 'FinSetObj'
    realizers: 'frozendict[str, frozenset[Term]]'

    def __post_init__(self):
        realizers = frozendict({x: frozenset(rs) for x, rs in self.realizers.items()})
        object.__setattr__(self, "realizers", realizers)

        if set(realizers) != set(self.carrier.elements):
            raise IllTyped(f"Realizers are given for {sorted(realizers)} but the carrier is {self.carrier}")
        for x, rs in realizers.items():
            if not rs:
                raise IllTyped(f"Element `{x}` has no realizer")
            for r in rs:
                if not is_normal(r):
                    raise IllTyped(f"Realizer {r} of `{x}` is not in normal form")

    @classmethod
    def of(cls, realizers: 't.Mapping[str, t.Iterable[Term]]') -> 'Assembly':
        return cls(FinSetObj(tuple(realizers)), frozendict({x: frozenset(rs) for x, rs in realizers.items()}))

    def realizers_of(self, x: 'str') -> 'tuple[Term, ...]':
        return sort_terms(self.realizers[x])

    def realizes(self, r: 'Term', x: 'str') -> 'bool':
        return r in self.realizers[x]

    def elements_realized_by(self, r: 'Term') -> 'tuple[str, ...]':
        return tuple(x for x in self.carrier if r in self.realizers[x])

    def pairs(self) -> 't.Iterator[tuple[str, Term]]':
        """Every ``(x, e)`` with ``e ⊩ x``."""
        for x in self.carrier:
            for r in self.realizers_of(x):
                yield x, r

    def __len__(self):
        return len(self.carrier)

    def __str__(self):
        inner = ", ".join(f"{x}⊩[{'; '.join(map(str, self.realizers_of(x)))}]" for x in self.carrier)
        return "{" + inner + "}"


class PartitionedAssembly(Assembly):
    def __post_init__(self):
        super().__post_init__()
        for x, rs in self.realizers.items():
            if len(rs) != 1:
                raise IllTyped(f"Element `{x}` of a partitioned assembly has {len(rs)} realizers")

    @classmethod
    def from_codes(cls, codes: 't.Mapping[str, Term]') -> 'PartitionedAssembly':
        return cls(FinSetObj(tuple(codes)), frozendict({x: frozenset((r,)) for x, r in codes.items()}))

    def realizer(self, x: 'str') -> 'Term':
        return next(iter(self.realizers[x]))

    def codes(self) -> 'frozendict[str, Term]':
        return frozendict({x: self.realizer(x) for x in self.carrier})


def is_partitioned(a: 'Assembly') -> 'bool':
    return all(len(rs) == 1 for rs in a.realizers.values())

def is_modest(a: 'Assembly') -> 'bool':
    seen = set()
    for rs in a.realizers.values():
        if seen & rs:
            return False
        seen |= rs
    return True

def as_partitioned(a: 'Assembly') -> 'PartitionedAssembly':
    if isinstance(a, PartitionedAssembly):
        return a
    return PartitionedAssembly(a.carrier, a.realizers)

def nabla(n: 'FinSetObj') -> 'PartitionedAssembly':
    """Every element shares the code ``0̲``."""
    return PartitionedAssembly(n, frozendict({x: frozenset((underline(0),)) for x in n}))
