import typing as t
import logging
import functools as ft
import itertools as it
from dataclasses import dataclass

from frozendict import frozendict

from .term import Term, S, K
from .reduce import EvalBudget, Normal, EvalOutcome, apply, reduce
from .bracket import compile_text, IDENT

logger = logging.getLogger("WeiContainers")

FALSE = compile_text(r"\x y. y")
TRUE = compile_text(r"\x y. x")
PAIR = compile_text(r"\x y z. z x y")
FST = compile_text(r"\p. p K")
SND = compile_text(r"\p. p (S K)")

ENV: 'frozendict[str, Term]' = frozendict({
    "pair": PAIR,
    "fst": FST,
    "snd": SND,
    "ident": IDENT,
    "zero": FALSE,
    "one": TRUE,
    "false": FALSE,
    "true": TRUE,
})


@dataclass(frozen=True)
class StandardCodes:
    pair: 'Term'
    fst: 'Term'
    snd: 'Term'
    true_: 'Term'
    false_: 'Term'
    ident: 'Term'

@ft.lru_cache(maxsize=None)
def standard_codes() -> 'StandardCodes':
    return StandardCodes(PAIR, FST, SND, TRUE, FALSE, IDENT)

def underline(i: 'int') -> 'Term':
    """Boolean numerals: ``0`` is ``λx.λy.y`` and ``1`` is ``λx.λy.x``."""
    if i == 0:
        return FALSE
    if i == 1:
        return TRUE
    raise ValueError(f"Only 0 and 1 have a canonical code, got {i}")

def code(text: 'str', **constants: 'Term') -> 'Term':
    """Compile λ-text where ``pair``, ``fst``, ``snd`` etc. name the standard codes."""
    env = dict(ENV)
    env.update(constants)
    return compile_text(text, env)

def compose_codes(g: 'Term', f: 'Term') -> 'Term':
    """A code for ``λx. g (f x)``."""
    return code(r"\x. g (f x)", g=g, f=f)


def _normal(outcome: 'EvalOutcome', what: 'str') -> 'Term':
    if not isinstance(outcome, Normal):
        raise ValueError(f"{what} did not normalize within {outcome.steps} steps")
    return outcome.term

def pair_of(a: 'Term', b: 'Term', budget: 'EvalBudget' = None) -> 'Term':
    return _normal(reduce(PAIR(a, b), budget), f"pair {a} {b}")

def first_of(w: 'Term', budget: 'EvalBudget' = None) -> 'Term':
    return _normal(apply(FST, w, budget), f"fst {w}")

def second_of(w: 'Term', budget: 'EvalBudget' = None) -> 'Term':
    return _normal(apply(SND, w, budget), f"snd {w}")


@dataclass(frozen=True)
class FilterSpec:
    member: 't.Callable[[Term], bool]' = lambda term: True
    name: 'str' = "all"

    def __contains__(self, term: 'Term') -> 'bool':
        return bool(self.member(term))

def size_bounded_filter(bound: 'int') -> 'FilterSpec':
    return FilterSpec(lambda term: term.size <= bound, f"size<={bound}")

def observe(terms: 't.Iterable[Term]', budget: 'EvalBudget' = None) -> 'list[tuple[Term, Term, Term]]':
    """Every normalizing application between the given terms."""
    terms = list(terms)
    ret = []
    for a, x in it.product(terms, repeat=2):
        outcome = apply(a, x, budget)
        if isinstance(outcome, Normal):
            ret.append((a, x, outcome.term))
    return ret

def check_filter_closure(
    fs: 'FilterSpec',
    observed: 't.Iterable[tuple[Term, Term, t.Union[Term, EvalOutcome]]]',
) -> 'bool':
    if S not in fs or K not in fs:
        logger.debug(f"Filter `{fs.name}` is missing a distinguished combinator")
        return False

    for a, x, result in observed:
        if isinstance(result, Normal):
            result = result.term
        if a in fs and x in fs and result not in fs:
            logger.debug(f"Filter `{fs.name}`: {a} · {x} = {result} leaves the filter")
            return False
    return True
