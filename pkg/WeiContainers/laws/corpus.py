"""
Seeded generators for law checks. Every function takes a ``random.Random``
or a seed, so a run is reproducible from its seed alone.
"""
import typing as t
import random
import itertools as it

from frozendict import frozendict

from ..finbase import FinSetObj, FinMap
from ..finbase.labels import split_pair
from ..assemblies import PartitionedAssembly
from ..containers import Container, Morphism, from_fibers, build_morphism, canonical_pullback, identity_container
from ..weihrauch import FiniteProblem, ExtendedPredicate, wlem
from ..pca import Term, App, Var, S, K, underline, pair_of

RNG = t.Union[random.Random, int]


def _rng(rng: 'RNG') -> 'random.Random':
    return rng if isinstance(rng, random.Random) else random.Random(rng)

def labels(prefix: 'str', n: 'int') -> 'list[str]':
    return [f"{prefix}{i}" for i in range(n)]


def random_container(
    rng: 'RNG',
    max_positions: 'int' = 3,
    max_directions: 'int' = 3,
    answerable: 'bool' = False,
    nonempty: 'bool' = False,
) -> 'Container':
    rng = _rng(rng)
    n = rng.randint(1 if nonempty or answerable else 0, max_positions)
    positions = labels("u", n)
    low = n if answerable else 0
    m = rng.randint(low, max(low, max_directions))

    fibers: 'dict[str, list[str]]' = {u: [] for u in positions}
    directions = labels("x", m)
    for i, x in enumerate(directions):
        # answerable containers get one direction per position first
        u = positions[i] if answerable and i < n else rng.choice(positions)
        fibers[u].append(x)
    return from_fibers(fibers)

def all_containers(max_positions: 'int', max_directions: 'int') -> 'list[Container]':
    """One container per fiber profile, up to isomorphism."""
    ret = []
    for n in range(max_positions + 1):
        for profile in it.combinations_with_replacement(range(max_directions + 1), n):
            if sum(profile) > max_directions:
                continue
            fibers = {}
            count = it.count()
            for i, size in enumerate(profile):
                fibers[f"u{i}"] = [f"x{next(count)}" for _ in range(size)]
            ret.append(from_fibers(fibers))
    return ret


def random_morphism(rng: 'RNG', p: 'Container', q: 'Container') -> 't.Optional[Morphism]':
    """A uniformly built morphism ``p → q``, or ``None`` when some position cannot be answered."""
    rng = _rng(rng)
    forward = {}
    for u in p.positions:
        choices = [v for v in q.positions if not q.fiber(v) or p.fiber(u)]
        if not choices:
            return None
        forward[u] = rng.choice(choices)

    pb = canonical_pullback(q, FinMap(p.positions, q.positions, forward))
    backward = {c: rng.choice(p.fiber(split_pair(c)[0])) for c in pb.apex}
    return build_morphism(p, q, forward, backward)

def composable_triple(
    rng: 'RNG',
    max_positions: 'int' = 3,
    max_directions: 'int' = 3,
    attempts: 'int' = 100,
) -> 'tuple[Morphism, Morphism, Morphism]':
    """Morphisms ``f: P → Q``, ``g: Q → R`` and ``h: R → S``."""
    rng = _rng(rng)
    for _ in range(attempts):
        cs = [random_container(rng, max_positions, max_directions) for _ in range(4)]
        ms = [random_morphism(rng, a, b) for a, b in zip(cs, cs[1:])]
        if all(m is not None for m in ms):
            return tuple(ms)
    raise ValueError(f"No composable triple found in {attempts} attempts")


def random_problem(rng: 'RNG', max_inputs: 'int' = 3, max_outputs: 'int' = 3) -> 'FiniteProblem':
    rng = _rng(rng)
    inputs = labels("i", rng.randint(0, max_inputs))
    outputs = labels("o", rng.randint(1, max_outputs))
    solutions = {}
    for u in inputs:
        k = rng.randint(0, len(outputs))
        solutions[u] = frozenset(rng.sample(outputs, k))
    return FiniteProblem(FinSetObj(tuple(inputs)), FinSetObj(tuple(outputs)), frozendict(solutions))


def id2_distinct() -> 'Container':
    """The identity on ``{0, 1}`` realized by ``0̲`` and ``1̲``."""
    two = PartitionedAssembly.from_codes({"0": underline(0), "1": underline(1)})
    return identity_container(two)

def predicate_corpus() -> 'dict[str, ExtendedPredicate]':
    zero, one = underline(0), underline(1)
    both = pair_of(zero, one)
    return {
        "wlem": wlem(),
        "point": ExtendedPredicate.of({zero: [{zero}]}),
        "either": ExtendedPredicate.of({zero: [{zero, one}]}),
        "copy": ExtendedPredicate.of({zero: [{zero}], one: [{one}]}),
        "choice3": ExtendedPredicate.of({one: [{zero}, {one}, {zero, one}]}),
        "paired": ExtendedPredicate.of({both: [{zero}, {both}]}),
    }


def random_term(rng: 'RNG', size: 'int', variables: 't.Sequence[str]' = ()) -> 'Term':
    """A random applicative tree with ``size`` leaves drawn from S, K and ``variables``."""
    rng = _rng(rng)
    if size <= 1:
        leaves = [S, K, *(Var(v) for v in variables)]
        return rng.choice(leaves)
    left = rng.randint(1, size - 1)
    return App(random_term(rng, left, variables), random_term(rng, size - left, variables))
