import typing as t
import logging
from dataclasses import dataclass

from frozendict import frozendict

from ..finbase import FinSetObj, FinMap, compose, identity
from ..finbase.labels import pair_label, split_pair
from ..containers import (
    Container, Morphism, build_morphism, find_morphism, is_answerable, canonical_pullback,
)
from ..errors import NotAnswerable, IllTyped, KindMismatch

logger = logging.getLogger("WeiContainers")


@dataclass(frozen=True)
class FiniteProblem:
    """
    A multi-valued problem ``f : inputs → P(outputs)``. Inputs with no
    solution lie outside the domain.
    """
    inputs: 'FinSetObj'
    outputs: 'FinSetObj'
    solutions: 'frozendict[str, frozenset[str]]'

    def __post_init__(self):
        solutions = {u: frozenset(self.solutions.get(u, ())) for u in self.inputs}
        extra = set(self.solutions) - set(self.inputs)
        if extra:
            raise IllTyped(f"Solutions are given for unknown inputs {sorted(extra)}")
        for u, ys in solutions.items():
            stray = ys - set(self.outputs)
            if stray:
                raise IllTyped(f"Input `{u}` has solutions {sorted(stray)} outside the outputs")
        object.__setattr__(self, "solutions", frozendict(solutions))

    @classmethod
    def of(cls, solutions: 't.Mapping[str, t.Iterable[str]]', outputs: 't.Iterable[str]' = None) -> 'FiniteProblem':
        solutions = {u: frozenset(ys) for u, ys in solutions.items()}
        if outputs is None:
            outputs = set().union(*solutions.values()) if solutions else ()
        return cls(FinSetObj(tuple(solutions)), FinSetObj(tuple(outputs)), frozendict(solutions))

    @property
    def domain(self) -> 'FinSetObj':
        return FinSetObj(tuple(u for u in self.inputs if self.solutions[u]))

    def __call__(self, u: 'str') -> 'frozenset[str]':
        return self.solutions[u]

    def __str__(self):
        inner = ", ".join(f"{u}↦{{{', '.join(sorted(self.solutions[u]))}}}" for u in self.inputs)
        return "{" + inner + "}"


@dataclass(frozen=True)
class ProblemReduction:
    """``phi`` translates instances, ``psi`` maps ``(u, j)`` with ``j ∈ g(phi(u))`` back to ``f(u)``."""
    phi: 'FinMap'
    psi: 'FinMap'


def container_of_problem(f: 'FiniteProblem') -> 'Container':
    """The first projection ``Σ_{u ∈ dom f} f(u) → dom f``."""
    graph = {pair_label(u, y): u for u in f.domain for y in sorted(f(u))}
    return Container(FinMap(FinSetObj(tuple(graph)), f.domain, graph))

def problem_of_container(p: 'Container') -> 'FiniteProblem':
    """Positions become instances and the fiber over each is its set of solutions."""
    if p.kind != "finset":
        raise KindMismatch("Only containers over finite sets describe finite problems")
    if not is_answerable(p):
        empty = [u for u in p.positions if not p.fiber(u)]
        raise NotAnswerable(f"Positions {empty} have no directions")
    return FiniteProblem(p.positions, p.directions, frozendict({u: frozenset(p.fiber(u)) for u in p.positions}))

def problem_roundtrip_iso(p: 'Container') -> 'tuple[Morphism, Morphism]':
    """
    The isomorphism between ``p`` and ``container_of_problem(problem_of_container(p))``,
    identity on positions and relabelling a direction ``x`` over ``u`` as ``(u, x)``.
    """
    c = container_of_problem(problem_of_container(p))

    there = build_morphism(p, c, identity(p.positions), lambda label: split_pair(split_pair(label)[1])[1])
    # the canonical apex of the way back already names directions as `(u, x)`
    back = build_morphism(c, p, identity(p.positions), lambda label: label)
    return there, back


def _reduction_of_morphism(f: 'FiniteProblem', m: 'Morphism') -> 'ProblemReduction':
    pb = canonical_pullback(m.dst, m.forward)
    psi = {}
    for label in pb.apex:
        u, answer = split_pair(label)
        j = split_pair(answer)[1]
        psi[pair_label(u, j)] = split_pair(m.backward_map(label))[1]
    dom = FinSetObj(tuple(psi))
    return ProblemReduction(m.forward_map, FinMap(dom, f.outputs, psi))

def reduce_problems(f: 'FiniteProblem', g: 'FiniteProblem') -> 't.Optional[ProblemReduction]':
    """A reduction ``f ≤ g``; the search is exhaustive, so ``None`` means there is none."""
    m = find_morphism(container_of_problem(f), container_of_problem(g))
    if m is None:
        logger.debug(f"{f} does not reduce to {g}")
        return None
    return _reduction_of_morphism(f, m)

def check_reduction(f: 'FiniteProblem', g: 'FiniteProblem', r: 'ProblemReduction') -> 'list[str]':
    errors = []
    if r.phi.dom != f.domain or r.phi.cod != g.domain:
        return [f"The instance map {r.phi} does not go from {f.domain} to {g.domain}"]

    for u in f.domain:
        for j in sorted(g(r.phi(u))):
            label = pair_label(u, j)
            if label not in r.psi.dom:
                errors.append(f"No answer is given for `{j}` over `{u}`")
            elif r.psi(label) not in f(u):
                errors.append(f"`{r.psi(label)}` is not a solution of `{u}`")
    return errors

def verify_reduction(f: 'FiniteProblem', g: 'FiniteProblem', r: 'ProblemReduction') -> 'bool':
    errors = check_reduction(f, g, r)
    for error in errors:
        logger.debug(f"Reduction check failed: {error}")
    return not errors

def compose_reductions(r1: 'ProblemReduction', r2: 'ProblemReduction', f: 'FiniteProblem') -> 'ProblemReduction':
    """
    ``f ≤ h`` from ``r1 : f ≤ g`` and ``r2 : g ≤ h``; an answer ``k`` to
    ``phi2(phi1(u))`` is fed through ``psi2`` and then ``psi1``.
    """
    phi = compose(r2.phi, r1.phi)
    psi = {}
    for label in r2.psi.dom:
        v, k = split_pair(label)
        for u in r1.phi.fiber(v):
            j = r2.psi(label)
            psi[pair_label(u, k)] = r1.psi(pair_label(u, j))
    return ProblemReduction(phi, FinMap(FinSetObj(tuple(psi)), f.outputs, psi))
