import typing as t
import logging
import functools as ft
from dataclasses import dataclass, field

from frozendict import frozendict

from .assembly import Assembly, PartitionedAssembly
from ..finbase import FinMap, compose, identity, is_surjective
from ..finbase.labels import pair_label
from ..pca import Term, EvalBudget, Normal, apply, enumerate_terms, compose_codes, IDENT
from ..errors import IllTyped, UnverifiedTracking, CodDomMismatch
from ..typing import DEFAULT_SETTINGS

logger = logging.getLogger("WeiContainers")


@dataclass(frozen=True)
class TrackedMap:
    """
    A carrier map together with a code computing it on realizers.

    Equality ignores the code: two tracked maps are the same morphism when
    their underlying functions agree.
    """
    src: 'Assembly'
    dst: 'Assembly'
    fn: 'FinMap'
    code: 'Term' = field(compare=False)
    budget: 'EvalBudget' = field(default_factory=EvalBudget, compare=False)
    verified: 'bool' = field(default=False, compare=False)

    def __post_init__(self):
        if self.fn.dom != self.src.carrier or self.fn.cod != self.dst.carrier:
            raise IllTyped(f"{self.fn} is not a map between the carriers of {self.src} and {self.dst}")

    def __call__(self, x: 'str') -> 'str':
        return self.fn(x)

    @property
    def dom(self) -> 'Assembly':
        return self.src

    @property
    def cod(self) -> 'Assembly':
        return self.dst

    def __str__(self):
        return f"{self.fn} tracked by {self.code}"


def check_tracking(
    src: 'Assembly',
    dst: 'Assembly',
    fn: 'FinMap',
    code: 'Term',
    b: 'EvalBudget' = None,
) -> 'list[str]':
    """Every failed obligation ``code · e ⊩ fn(x)`` for ``e ⊩ x``, as a message."""
    if fn.dom != src.carrier or fn.cod != dst.carrier:
        raise IllTyped(f"{fn} is not typed {src.carrier} → {dst.carrier}")

    failures = []
    for x, e in src.pairs():
        outcome = apply(code, e, b)
        if not isinstance(outcome, Normal):
            failures.append(f"{code} · {e} exhausted the budget after {outcome.steps} steps")
        elif outcome.term not in dst.realizers[fn(x)]:
            failures.append(f"{code} · {e} = {outcome.term} does not realize `{fn(x)}`")
    return failures

def verify_tracking(
    src: 'Assembly',
    dst: 'Assembly',
    fn: 'FinMap',
    code: 'Term',
    b: 'EvalBudget' = None,
) -> 'bool':
    failures = check_tracking(src, dst, fn, code, b)
    for failure in failures:
        logger.debug(f"Tracking check failed: {failure}")
    return not failures

def track(
    src: 'Assembly',
    dst: 'Assembly',
    fn: 'FinMap',
    code: 'Term',
    b: 'EvalBudget' = None,
) -> 'TrackedMap':
    """Verify and wrap; raises ``UnverifiedTracking`` with the first failed obligation."""
    b = b or EvalBudget()
    failures = check_tracking(src, dst, fn, code, b)
    if failures:
        raise UnverifiedTracking(failures[0])
    return TrackedMap(src, dst, fn, code, b, verified=True)

def identity_tracked(a: 'Assembly') -> 'TrackedMap':
    return track(a, a, identity(a.carrier), IDENT)

def compose_tracked(g: 'TrackedMap', f: 'TrackedMap') -> 'TrackedMap':
    """``g ∘ f`` tracked by ``λx. e_g (e_f x)`` within the summed budget."""
    if f.dst != g.src:
        raise CodDomMismatch(f"Cannot compose tracked maps: {f.dst} is not {g.src}")
    return track(f.src, g.dst, compose(g.fn, f.fn), compose_codes(g.code, f.code), f.budget + g.budget)


def tracking_obstructed(src: 'Assembly', dst: 'Assembly', fn: 'FinMap') -> 'bool':
    """
    True when one realizer must be sent to realizers of two targets that share
    none. No code can then track ``fn``.
    """
    by_realizer: 'dict[Term, set[str]]' = {}
    for x, e in src.pairs():
        by_realizer.setdefault(e, set()).add(fn(x))

    for targets in by_realizer.values():
        common = None
        for y in targets:
            common = set(dst.realizers[y]) if common is None else common & dst.realizers[y]
        if not common:
            return True
    return False

def search_tracking(
    src: 'Assembly',
    dst: 'Assembly',
    fn: 'FinMap',
    size_bound: 'int' = DEFAULT_SETTINGS["bound"],
    b: 'EvalBudget' = None,
    precompose: 't.Optional[Term]' = None,
) -> 't.Optional[Term]':
    """
    The least code of size ``≤ size_bound`` tracking ``fn``, or ``None`` when
    there is none at this bound.

    With ``precompose`` set, candidates ``c`` are run on ``precompose · e`` and
    the returned code is the composite ``λx. c (precompose x)``.
    """
    b = b or EvalBudget()
    if fn.dom != src.carrier or fn.cod != dst.carrier:
        raise IllTyped(f"{fn} is not typed {src.carrier} → {dst.carrier}")
    return _search_tracking(src, dst, fn, size_bound, b, precompose)

@ft.lru_cache(maxsize=4096)
def _search_tracking(src, dst, fn, size_bound, b, precompose):
    if tracking_obstructed(src, dst, fn):
        logger.debug(f"No code can track {fn}: realizers are shared across disjoint targets")
        return None

    obligations = []
    for x, e in src.pairs():
        if precompose is not None:
            outcome = apply(precompose, e, b)
            if not isinstance(outcome, Normal):
                logger.debug(f"Precomposed code {precompose} does not normalize on {e}")
                return None
            e = outcome.term
        obligations.append((e, dst.realizers[fn(x)]))

    for candidate in enumerate_terms(size_bound):
        for e, targets in obligations:
            outcome = apply(candidate, e, b)
            if not isinstance(outcome, Normal) or outcome.term not in targets:
                break
        else:
            if precompose is None:
                logger.debug(f"Found {candidate} tracking {fn}")
                return candidate

            composite = compose_codes(candidate, precompose)
            if verify_tracking(src, dst, fn, composite, b + b):
                logger.debug(f"Found {candidate} after {precompose} tracking {fn}")
                return composite

    logger.debug(f"No code of size <= {size_bound} tracks {fn}")
    return None


def regular_epi_check(f: 'TrackedMap', e_section: 'Term', b: 'EvalBudget' = None) -> 'bool':
    """
    ``e_section`` sends every realizer of ``y`` to a realizer of some ``x`` over
    ``y``, and ``f``'s code maps that back to a realizer of ``y``.
    """
    b = b or EvalBudget()
    if not f.verified:
        raise UnverifiedTracking(f"{f} has not been verified")
    if not is_surjective(f.fn):
        logger.debug(f"{f.fn} is not surjective, so it has no section")
        return False

    for y, r in f.dst.pairs():
        outcome = apply(e_section, r, b)
        if not isinstance(outcome, Normal):
            logger.debug(f"Section code {e_section} exhausted the budget on {r}")
            return False

        s = outcome.term
        if not any(f.src.realizes(s, x) for x in f.fn.fiber(y)):
            logger.debug(f"Section code sends {r} to {s} which realizes nothing over `{y}`")
            return False

        back = apply(f.code, s, b)
        if not isinstance(back, Normal) or back.term not in f.dst.realizers[y]:
            logger.debug(f"{f.code} · {s} does not realize `{y}` again")
            return False
    return True


def projective_cover(a: 'Assembly') -> 'tuple[PartitionedAssembly, TrackedMap]':
    """The realizer pairs ``(e, x)`` with ``e ⊩ x``, each realized by its ``e``."""
    codes = {}
    counit = {}
    for x, e in a.pairs():
        label = pair_label(str(e), x)
        codes[label] = e
        counit[label] = x

    cover = PartitionedAssembly.from_codes(codes)
    return cover, track(cover, a, FinMap(cover.carrier, a.carrier, frozendict(counit)), IDENT)
