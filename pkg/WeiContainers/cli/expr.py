import typing as t
import re
import logging

from ..containers import Container
from ..operators import coproduct, product, tensor, composition_product, composition_product_bounded
from ..weihrauch import as_container
from ..pca import EvalBudget, Term
from ..errors import ExpressionError

logger = logging.getLogger("WeiContainers")

KEYWORDS = ("x", "par", "star", "star_p")


class ExprParser:
    """
    Operator expressions over bound names. ``+`` binds loosest, then ``x``,
    then ``par``, ``star`` and ``star_p[b]``; every operator associates to
    the left and parentheses group.
    """
    TOKEN_RE = re.compile(r"\s*(?:(star_p\[\s*\d+\s*\])|([A-Za-z_][A-Za-z0-9_'\-]*)|(.))")
    BOUND_RE = re.compile(r"star_p\[\s*(\d+)\s*\]")

    def __init__(self):
        self.reset()

    def reset(self):
        self.text = ""
        self.tokens: 'list[tuple[str, str]]' = []
        self.pos = 0
        self.env: 't.Mapping[str, t.Any]' = {}
        self.budget: 't.Optional[EvalBudget]' = None

    def tokenize(self, text: 'str') -> 'list[tuple[str, str]]':
        tokens = []
        for match in self.TOKEN_RE.finditer(text.rstrip()):
            bounded, word, char = match.groups()
            if bounded:
                tokens.append(("star_p", bounded))
            elif word in KEYWORDS:
                tokens.append((word, word))
            elif word:
                tokens.append(("name", word))
            elif char in "+()":
                tokens.append((char, char))
            else:
                raise ExpressionError(f"Unexpected character `{char}` in `{text}`")
        return tokens

    def peek(self) -> 't.Optional[tuple[str, str]]':
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> 'tuple[str, str]':
        token = self.peek()
        if token is None:
            raise ExpressionError(f"Unexpected end of `{self.text}`")
        self.pos += 1
        return token

    def parse(self, text: 'str', env: 't.Mapping[str, t.Any]', budget: 'EvalBudget' = None) -> 'Container':
        self.reset()
        self.text = text
        self.env = env
        self.budget = budget
        self.tokens = self.tokenize(text)
        if not self.tokens:
            raise ExpressionError("Empty expression")

        ret = self.parse_sum()
        if self.peek() is not None:
            raise ExpressionError(f"Unexpected `{self.peek()[1]}` in `{text}`")
        return ret

    def parse_sum(self) -> 'Container':
        ret = self.parse_product()
        while self.peek() is not None and self.peek()[0] == "+":
            self.advance()
            ret = coproduct(ret, self.parse_product())
        return ret

    def parse_product(self) -> 'Container':
        ret = self.parse_sequential()
        while self.peek() is not None and self.peek()[0] == "x":
            self.advance()
            ret = product(ret, self.parse_sequential())
        return ret

    def parse_sequential(self) -> 'Container':
        ret = self.parse_atom()
        while self.peek() is not None and self.peek()[0] in ("par", "star", "star_p"):
            kind, text = self.advance()
            rhs = self.parse_atom()
            if kind == "par":
                ret = tensor(ret, rhs)
            elif kind == "star":
                ret = composition_product(ret, rhs)
            else:
                bound = int(self.BOUND_RE.fullmatch(text).group(1))
                ret = composition_product_bounded(ret, rhs, bound, self.budget)
        return ret

    def parse_atom(self) -> 'Container':
        kind, text = self.advance()
        if kind == "(":
            ret = self.parse_sum()
            if self.advance()[0] != ")":
                raise ExpressionError(f"Unbalanced parentheses in `{self.text}`")
            return ret
        if kind != "name":
            raise ExpressionError(f"Expected a name but found `{text}` in `{self.text}`")
        if text not in self.env:
            raise ExpressionError(f"Name `{text}` is not bound")

        value = self.env[text]
        if isinstance(value, Term):
            raise ExpressionError(f"`{text}` is a term, not a container")
        return as_container(value, self.budget)


def evaluate(text: 'str', env: 't.Mapping[str, t.Any]', budget: 'EvalBudget' = None) -> 'Container':
    logger.debug(f"Evaluating `{text}`")
    return ExprParser().parse(text, env, budget)
