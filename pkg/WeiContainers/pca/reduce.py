import typing as t
import logging
import functools as ft
from dataclasses import dataclass

from .term import Term, App, S, K
from ..utils import set_recursion_limit
from ..typing import DEFAULT_SETTINGS

logger = logging.getLogger("WeiContainers")

set_recursion_limit(10000)


@dataclass(frozen=True)
class EvalBudget:
    max_steps: 'int' = DEFAULT_SETTINGS["budget"]

    def __post_init__(self):
        if not isinstance(self.max_steps, int) or self.max_steps < 1:
            raise ValueError(f"Budget must be a positive step count, got {self.max_steps!r}")

    def __add__(self, other: 'EvalBudget') -> 'EvalBudget':
        return EvalBudget(self.max_steps + other.max_steps)


@dataclass(frozen=True)
class Normal:
    term: 'Term'
    steps: 'int'

    @property
    def is_normal(self) -> 'bool':
        return True


@dataclass(frozen=True)
class BudgetExhausted:
    steps: 'int'

    @property
    def is_normal(self) -> 'bool':
        return False


EvalOutcome = t.Union[Normal, BudgetExhausted]


class _OutOfFuel(Exception):
    pass


class _Fuel:
    __slots__ = ("steps", "limit")

    def __init__(self, limit: 'int'):
        self.steps = 0
        self.limit = limit

    def tick(self):
        if self.steps >= self.limit:
            raise _OutOfFuel()
        self.steps += 1


def _head_normalize(term: 'Term', fuel: '_Fuel') -> 'tuple[Term, list[Term]]':
    # args is a stack: the next argument to consume is at the end
    head = term
    args: 'list[Term]' = []
    while True:
        while isinstance(head, App):
            args.append(head.right)
            head = head.left

        if head == K and len(args) >= 2:
            fuel.tick()
            x = args.pop()
            args.pop()
            head = x
        elif head == S and len(args) >= 3:
            fuel.tick()
            x, y, z = args.pop(), args.pop(), args.pop()
            head = App(App(x, z), App(y, z))
        else:
            return head, args

def _normalize(term: 'Term', fuel: '_Fuel') -> 'Term':
    if not isinstance(term, App) or term.normal:
        return term

    head, args = _head_normalize(term, fuel)
    ret = head
    for arg in reversed(args):
        ret = App(ret, _normalize(arg, fuel), normal=True)
    return ret


def reduce(term: 'Term', budget: 'EvalBudget' = None) -> 'EvalOutcome':
    """
    Weak reduction to full normal form, leftmost-outermost, one step per
    ``K x y → x`` or ``S x y z → x z (y z)`` contraction.
    """
    budget = budget or EvalBudget()
    fuel = _Fuel(budget.max_steps)
    try:
        ret = _normalize(term, fuel)
    except _OutOfFuel:
        logger.debug(f"Budget of {budget.max_steps} steps exhausted on {term}")
        return BudgetExhausted(fuel.steps)
    return Normal(ret, fuel.steps)

@ft.lru_cache(maxsize=1 << 16)
def _apply(code: 'Term', arg: 'Term', max_steps: 'int') -> 'EvalOutcome':
    return reduce(App(code, arg), EvalBudget(max_steps))

def apply(code: 'Term', arg: 'Term', budget: 'EvalBudget' = None) -> 'EvalOutcome':
    budget = budget or EvalBudget()
    return _apply(code, arg, budget.max_steps)

def apply_all(code: 'Term', *args: 'Term', budget: 'EvalBudget' = None) -> 'EvalOutcome':
    """``code · a₁ · … · aₙ``; steps add up, the budget is shared."""
    budget = budget or EvalBudget()
    return reduce(code(*args), budget)

def normal_form(term: 'Term', budget: 'EvalBudget' = None) -> 'Term':
    ret = reduce(term, budget)
    if not isinstance(ret, Normal):
        raise ValueError(f"{term} has no normal form within {ret.steps} steps")
    return ret.term
