import typing as t
import logging
from dataclasses import dataclass, field

import networkx as nx
from graphviz import Digraph

from .problem import FiniteProblem, container_of_problem
from .extended import ExtendedPredicate, container_of_predicate
from ..containers import Container, Morphism, search_morphism, require_same_kind
from ..pca import EvalBudget

if t.TYPE_CHECKING:
    import pandas as pd

logger = logging.getLogger("WeiContainers")

ITEM = t.Union[Container, FiniteProblem, ExtendedPredicate]


def as_container(item: 'ITEM', budget: 'EvalBudget' = None) -> 'Container':
    if isinstance(item, FiniteProblem):
        return container_of_problem(item)
    if isinstance(item, ExtendedPredicate):
        return container_of_predicate(item, budget)
    return item


@dataclass
class DegreePoset:
    """
    Degrees of a family of containers. ``graph`` has an edge ``a → b`` for each
    reduction ``a ≤ b`` found directly, carrying its witness; classes are its
    strongly connected components and ``hasse`` covers them by representative.
    """
    graph: 'nx.DiGraph'
    kind: 't.Literal["finset", "pasm"]'
    unknown: 'frozenset[tuple[str, str]]' = frozenset()
    bound: 't.Optional[int]' = None
    budget: 't.Optional[int]' = None
    classes: 'list[tuple[str, ...]]' = field(init=False)
    hasse: 'nx.DiGraph' = field(init=False)

    def __post_init__(self):
        self.classes = sorted(tuple(sorted(c)) for c in nx.strongly_connected_components(self.graph))
        self._rep = {name: c[0] for c in self.classes for name in c}

        quotient = nx.DiGraph()
        quotient.add_nodes_from(c[0] for c in self.classes)
        quotient.add_edges_from(
            (self._rep[a], self._rep[b]) for a, b in self.graph.edges if self._rep[a] != self._rep[b]
        )
        self.hasse = nx.transitive_reduction(quotient)

    @property
    def names(self) -> 'list[str]':
        return sorted(self.graph.nodes)

    def representative(self, name: 'str') -> 'str':
        return self._rep[name]

    def leq(self, a: 'str', b: 'str') -> 'bool':
        """``a ≤ b`` by a chain of found reductions."""
        return a == b or nx.has_path(self.graph, a, b)

    def equivalent(self, a: 'str', b: 'str') -> 'bool':
        return self._rep[a] == self._rep[b]

    def witness(self, a: 'str', b: 'str') -> 't.Optional[Morphism]':
        if not self.graph.has_edge(a, b):
            return None
        return self.graph.edges[a, b]["morphism"]

    def verdict(self, a: 'str', b: 'str') -> 't.Literal["REDUCIBLE", "NOT-REDUCIBLE", "UNKNOWN-AT-BOUND"]':
        if a == b or self.graph.has_edge(a, b):
            return "REDUCIBLE"
        return "UNKNOWN-AT-BOUND" if (a, b) in self.unknown else "NOT-REDUCIBLE"

    def hasse_edges(self) -> 'list[tuple[str, str]]':
        return sorted(self.hasse.edges)

    def to_dot(self, comment: 'str' = None) -> 'str':
        """
        A DOT digraph, least degrees at the bottom. Edges found by a bounded
        search are dashed and name the bound.
        """
        dot = Digraph(name="degrees", comment=comment, graph_attr={"rankdir": "BT"})
        for c in self.classes:
            dot.node(c[0], label=", ".join(c))

        for a, b in self.hasse_edges():
            if self.kind == "pasm":
                dot.edge(a, b, style="dashed", label=f"bound {self.bound}, budget {self.budget}")
            else:
                dot.edge(a, b)
        return dot.source

    def to_pandas(self) -> 'pd.DataFrame':
        """The matrix of direct verdicts, row ``a`` and column ``b`` for ``a ≤ b``."""
        logger.debug("Converting DegreePoset to pandas DataFrame")
        try:
            import pandas as pd
        except ImportError:
            logger.error("pandas not installed - tables extra required")
            raise ImportError("`tables` extra is required to use `to_pandas`")

        names = self.names
        return pd.DataFrame([[self.verdict(a, b) for b in names] for a in names], index=names, columns=names)


def _named(items: 't.Union[t.Mapping[str, ITEM], t.Sequence[ITEM]]') -> 'dict[str, ITEM]':
    if isinstance(items, t.Mapping):
        return dict(items)
    return {str(i): item for i, item in enumerate(items)}

def degree_poset(
    items: 't.Union[t.Mapping[str, ITEM], t.Sequence[ITEM]]',
    bound: 'int' = None,
    budget: 'EvalBudget' = None,
) -> 'DegreePoset':
    """
    Query every ordered pair of ``items`` for a reduction. Over assemblies a
    missing edge only means nothing was found at ``bound``; those pairs are
    kept in ``unknown``.
    """
    named = _named(items)
    containers = {name: as_container(item, budget) for name, item in sorted(named.items())}
    cat = require_same_kind(*containers.values()) if containers else None

    graph = nx.DiGraph()
    graph.add_nodes_from(containers)
    unknown = set()
    result = None
    for a, p in containers.items():
        for b, q in containers.items():
            if a == b:
                continue
            result = search_morphism(p, q, bound, budget)
            logger.debug(f"{a} ≤ {b}: {result.verdict}")
            if result.found:
                graph.add_edge(a, b, morphism=result.morphism)
            elif not result.definitive:
                unknown.add((a, b))

    kind = cat.kind if cat is not None else "finset"
    if result is not None and kind == "pasm":
        return DegreePoset(graph, kind, frozenset(unknown), result.bound, result.budget)
    return DegreePoset(graph, kind, frozenset(unknown))
