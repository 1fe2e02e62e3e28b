"""
Extended predicates ``p : 𝔸 → P(P(𝔸))`` and their containers.

A predicate is sent to the container whose positions are the pairs
``(r, θ)`` with ``θ ∈ p(r)``, realized by ``r``, and whose directions over
``(r, θ)`` are the ``s ∈ θ``, realized by ``pair r s``. A partitioned
container goes the other way by collecting, for each realizer of a position,
the realizer sets of the fibers it realizes. Wherever a choice is needed the
least label wins.
"""
import typing as t
import logging
from dataclasses import dataclass, field

from frozendict import frozendict

from ..finbase import FinSetObj, FinMap, identity
from ..finbase.labels import pair_label, split_pair, set_label
from ..assemblies import PartitionedAssembly, track, nabla, sort_terms, is_partitioned, as_partitioned
from ..containers import Container, Morphism, make_container, build_morphism, find_morphism
from ..pca import (
    Term, EvalBudget, Normal, apply, apply_all, is_normal, underline, code, compose_codes,
    pair_of, second_of, FST, IDENT,
)
from ..errors import IllTyped, KindMismatch, UnverifiedInput

logger = logging.getLogger("WeiContainers")

REALIZER_SET = t.FrozenSet[Term]


def _set_key(theta: 'REALIZER_SET') -> 'str':
    return set_label(str(s) for s in theta)


@dataclass(frozen=True)
class ExtendedPredicate:
    """
    ``theta[r]`` is the set ``p(r)``. Realizers outside the support are left
    out; empty entries are dropped on construction.
    """
    theta: 'frozendict[Term, frozenset[REALIZER_SET]]'

    def __post_init__(self):
        theta = {}
        for r, sets in self.theta.items():
            sets = frozenset(frozenset(s) for s in sets)
            if not sets:
                continue
            for term in (r, *(s for xs in sets for s in xs)):
                if not is_normal(term):
                    raise IllTyped(f"Realizer {term} is not in normal form")
            theta[r] = sets
        object.__setattr__(self, "theta", frozendict(theta))

    @classmethod
    def of(cls, theta: 't.Mapping[Term, t.Iterable[t.Iterable[Term]]]') -> 'ExtendedPredicate':
        return cls(frozendict({r: frozenset(frozenset(xs) for xs in sets) for r, sets in theta.items()}))

    @property
    def support(self) -> 'tuple[Term, ...]':
        return sort_terms(self.theta)

    def __call__(self, r: 'Term') -> 'frozenset[REALIZER_SET]':
        return self.theta.get(r, frozenset())

    def sets_of(self, r: 'Term') -> 'list[REALIZER_SET]':
        """``p(r)`` in canonical order."""
        return sorted(self(r), key=_set_key)

    def __str__(self):
        inner = ", ".join(
            f"{r}↦{{{', '.join(_set_key(theta) for theta in self.sets_of(r))}}}" for r in self.support
        )
        return "{" + inner + "}"


@dataclass(frozen=True)
class ExtReductionWitness:
    """
    ``e_fwd`` translates realizers of the source support, ``f_family`` sends
    each ``(r, θ)`` to the ``ξ ∈ q(e_fwd · r)`` it is answered by, and
    ``e_bwd · r · s`` turns an answer ``s ∈ ξ`` into one in ``θ``.
    """
    e_fwd: 'Term'
    f_family: 'frozendict[tuple[Term, REALIZER_SET], REALIZER_SET]'
    e_bwd: 'Term'
    budget: 'EvalBudget' = field(default_factory=EvalBudget)


def check_ext_reduction(p: 'ExtendedPredicate', q: 'ExtendedPredicate', w: 'ExtReductionWitness') -> 'list[str]':
    errors = []
    for r in p.support:
        outcome = apply(w.e_fwd, r, w.budget)
        if not isinstance(outcome, Normal):
            errors.append(f"e_fwd · {r} exhausted the budget after {outcome.steps} steps")
            continue
        target = outcome.term
        if target not in q.theta:
            errors.append(f"e_fwd · {r} = {target} is outside the support of the target")
            continue

        for theta in p.sets_of(r):
            xi = w.f_family.get((r, theta))
            if xi is None:
                errors.append(f"No answer set is chosen for {_set_key(theta)} at {r}")
                continue
            if xi not in q(target):
                errors.append(f"{_set_key(xi)} is not in the target at {target}")
                continue

            for s in sort_terms(xi):
                answer = apply_all(w.e_bwd, r, s, budget=w.budget)
                if not isinstance(answer, Normal):
                    errors.append(f"e_bwd · {r} · {s} exhausted the budget after {answer.steps} steps")
                elif answer.term not in theta:
                    errors.append(f"e_bwd · {r} · {s} = {answer.term} is not in {_set_key(theta)}")
    return errors

def ext_reduce_verify(p: 'ExtendedPredicate', q: 'ExtendedPredicate', w: 'ExtReductionWitness') -> 'bool':
    errors = check_ext_reduction(p, q, w)
    for error in errors:
        logger.debug(f"Extended reduction check failed: {error}")
    return not errors

def compose_ext_reductions(w1: 'ExtReductionWitness', w2: 'ExtReductionWitness') -> 'ExtReductionWitness':
    """``p ≤ s`` from ``w1 : p ≤ q`` and ``w2 : q ≤ s``."""
    budget = w1.budget + w2.budget
    family = {}
    for (r, theta), xi in w1.f_family.items():
        target = apply(w1.e_fwd, r, w1.budget)
        if not isinstance(target, Normal):
            continue
        xi2 = w2.f_family.get((target.term, xi))
        if xi2 is not None:
            family[(r, theta)] = xi2

    return ExtReductionWitness(
        compose_codes(w2.e_fwd, w1.e_fwd),
        frozendict(family),
        code(r"\r s. b1 r (b2 (f1 r) s)", b1=w1.e_bwd, b2=w2.e_bwd, f1=w1.e_fwd),
        budget + w1.budget,
    )


def wlem() -> 'ExtendedPredicate':
    """The constant ``{{0̲}, {1̲}}`` on the support ``{0̲}``."""
    zero, one = underline(0), underline(1)
    return ExtendedPredicate.of({zero: [{zero}, {one}]})

def nabla_container() -> 'Container':
    """``2 → ∇(2)``: the answer is computable but the question is not."""
    two = FinSetObj.of("0", "1")
    total = PartitionedAssembly.from_codes({"0": underline(0), "1": underline(1)})
    return make_container(track(total, nabla(two), identity(two), code(r"\x. zero")))


def _predicate_positions(p: 'ExtendedPredicate') -> 'dict[str, tuple[Term, REALIZER_SET]]':
    return {pair_label(str(r), _set_key(theta)): (r, theta) for r in p.support for theta in p.sets_of(r)}

def container_of_predicate(p: 'ExtendedPredicate', budget: 'EvalBudget' = None) -> 'Container':
    positions, directions, graph = {}, {}, {}
    for i, (r, theta) in _predicate_positions(p).items():
        positions[i] = r
        for s in sort_terms(theta):
            x = pair_label(i, str(s))
            directions[x] = pair_of(r, s, budget)
            graph[x] = i

    total = PartitionedAssembly.from_codes(directions)
    base = PartitionedAssembly.from_codes(positions)
    return make_container(track(total, base, FinMap(total.carrier, base.carrier, graph), FST, budget))

def _partitioned_parts(p: 'Container') -> 'tuple[PartitionedAssembly, PartitionedAssembly]':
    if p.kind != "pasm":
        raise KindMismatch("Only containers over assemblies describe extended predicates")
    if not (is_partitioned(p.total) and is_partitioned(p.base)):
        raise UnverifiedInput(f"{p} is not built from partitioned assemblies")
    return as_partitioned(p.total), as_partitioned(p.base)

def _fiber_codes(p: 'Container', total: 'PartitionedAssembly', i: 'str') -> 'REALIZER_SET':
    return frozenset(total.realizer(x) for x in p.fiber(i))

def predicate_of_container(p: 'Container') -> 'ExtendedPredicate':
    total, base = _partitioned_parts(p)
    theta: 'dict[Term, set[REALIZER_SET]]' = {}
    for i in base.carrier:
        theta.setdefault(base.realizer(i), set()).add(_fiber_codes(p, total, i))
    return ExtendedPredicate.of(theta)

def _least_position(p: 'Container', total, base, r: 'Term', xs: 'REALIZER_SET') -> 'str':
    for i in base.carrier:
        if base.realizer(i) == r and _fiber_codes(p, total, i) == xs:
            return i
    raise ValueError(f"No position is realized by {r} with fiber codes {_set_key(xs)}")


def predicate_roundtrip_witnesses(
    p: 'ExtendedPredicate',
    budget: 'EvalBudget' = None,
) -> 'tuple[ExtReductionWitness, ExtReductionWitness]':
    """
    Witnesses for ``φ(ĥ(p)) ≤ p`` and ``p ≤ φ(ĥ(p))``; both translate inputs
    by the identity code. An answer set ``{pair r s | s ∈ θ}`` is decoded by
    ``snd`` on the way down and built by pairing on the way up.
    """
    budget = budget or EvalBudget()
    down, up = {}, {}
    for r in p.support:
        for theta in p.sets_of(r):
            xi = frozenset(pair_of(r, s, budget) for s in theta)
            down[(r, xi)] = frozenset(second_of(e, budget) for e in xi)
            up[(r, theta)] = xi

    return (
        ExtReductionWitness(IDENT, frozendict(down), code(r"\r s. pair r s"), budget),
        ExtReductionWitness(IDENT, frozendict(up), code(r"\x y. snd y"), budget),
    )

def container_roundtrip_morphisms(p: 'Container', budget: 'EvalBudget' = None) -> 'tuple[Morphism, Morphism]':
    """
    Morphisms ``p → h`` and ``h → p`` for ``h = ĥ(φ(p))``, both identity-tracked
    on positions. Going down, a position is sent to the least one with the same
    realizer and fiber codes; going up, an answer code picks the least direction
    it realizes.
    """
    total, base = _partitioned_parts(p)
    h = container_of_predicate(predicate_of_container(p), budget)

    def up(i: 'str') -> 'str':
        return pair_label(str(base.realizer(i)), _set_key(_fiber_codes(p, total, i)))

    def answer_up(label: 'str') -> 'str':
        i, direction = split_pair(label)
        e = split_pair(direction)[1]
        return next(x for x in p.fiber(i) if str(total.realizer(x)) == e)

    there = build_morphism(p, h, up, answer_up, IDENT, code(r"\w. snd (snd w)"), budget)

    h_positions = {}
    for i in base.carrier:
        r, xs = base.realizer(i), _fiber_codes(p, total, i)
        h_positions.setdefault(pair_label(str(r), _set_key(xs)), i)

    def answer_down(label: 'str') -> 'str':
        j, x = split_pair(label)
        return pair_label(j, str(total.realizer(x)))

    back = build_morphism(h, p, h_positions, answer_down, IDENT, IDENT, budget)
    return there, back


def morphism_of_reduction(
    p: 'ExtendedPredicate',
    q: 'ExtendedPredicate',
    w: 'ExtReductionWitness',
) -> 'Morphism':
    """
    The container morphism ``ĥ(p) → ĥ(q)`` of a reduction ``p ≤ q``. Positions
    move along ``e_fwd`` and ``f_family``; an answer ``pair t s`` comes back as
    ``pair r (e_bwd r s)``.
    """
    src = container_of_predicate(p, w.budget)
    dst = container_of_predicate(q, w.budget)
    src_positions = _predicate_positions(p)
    answers = {
        pair_label(i, str(s)): s for i, (_, xi) in _predicate_positions(q).items() for s in xi
    }

    def forward(i: 'str') -> 'str':
        r, theta = src_positions[i]
        target = apply(w.e_fwd, r, w.budget)
        return pair_label(str(target.term), _set_key(w.f_family[(r, theta)]))

    def backward(label: 'str') -> 'str':
        i, direction = split_pair(label)
        r, _ = src_positions[i]
        s = apply_all(w.e_bwd, r, answers[direction], budget=w.budget)
        return pair_label(i, str(s.term))

    return build_morphism(
        src, dst, forward, backward,
        w.e_fwd,
        code(r"\w. pair (fst w) (b (fst w) (snd (snd w)))", b=w.e_bwd),
        w.budget + w.budget,
    )

def reduction_of_morphism(m: 'Morphism') -> 'ExtReductionWitness':
    """
    The reduction ``φ(P) ≤ φ(Q)`` of a morphism ``m : P → Q``. Each answer set
    ``X ∈ φ(P)(r)`` is read off at the least position it comes from.
    """
    p, q = m.src, m.dst
    p_total, p_base = _partitioned_parts(p)
    q_total, _ = _partitioned_parts(q)

    family = {}
    for r, sets in predicate_of_container(p).theta.items():
        for xs in sets:
            i = _least_position(p, p_total, p_base, r, xs)
            family[(r, xs)] = _fiber_codes(q, q_total, m.forward_map(i))

    return ExtReductionWitness(
        m.forward.code,
        frozendict(family),
        code(r"\x y. e (pair x y)", e=m.backward.code),
        m.forward.budget + m.backward.budget,
    )


def search_ext_reduction(
    p: 'ExtendedPredicate',
    q: 'ExtendedPredicate',
    bound: 'int' = None,
    budget: 'EvalBudget' = None,
) -> 't.Optional[ExtReductionWitness]':
    """
    A reduction ``p ≤ q`` found through a container morphism ``ĥ(p) → ĥ(q)``
    and the round trips on either side. ``None`` only means no morphism was
    found at ``bound``.
    """
    m = find_morphism(container_of_predicate(p, budget), container_of_predicate(q, budget), bound, budget)
    if m is None:
        return None

    _, up = predicate_roundtrip_witnesses(p, budget)
    down, _ = predicate_roundtrip_witnesses(q, budget)
    return compose_ext_reductions(compose_ext_reductions(up, reduction_of_morphism(m)), down)
