import typing as t
import re

from .term import Term, App, Var, Lam, S, K
from ..errors import TermSyntaxError

LAMBDAS = ("\\", "λ")


class TermParser:
    """
    Reads ``S``/``K`` terms with juxtaposition for application and ``\\x. body``
    (or ``λx. body``) abstractions. Identifiers found in the environment are
    replaced by their terms unless a binder shadows them; a run of ``S`` and
    ``K`` letters such as ``SKK`` reads as the application of those combinators.
    """
    IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
    COMBINATORS_RE = re.compile(r"[SK]+")

    def __init__(self):
        self.reset()

    def reset(self):
        self.text = ""
        self.tokens: 'list[tuple[str, str, int]]' = []
        self.pos = 0
        self.env: 't.Mapping[str, Term]' = {}
        self.bound: 'list[str]' = []

    def tokenize(self, text: 'str') -> 'list[tuple[str, str, int]]':
        tokens = []
        i = 0
        while i < len(text):
            char = text[i]
            if char.isspace():
                i += 1
            elif char in "().":
                tokens.append((char, char, i))
                i += 1
            elif char in LAMBDAS:
                tokens.append(("lambda", char, i))
                i += 1
            else:
                match = self.IDENT_RE.match(text, i)
                if match is None:
                    raise TermSyntaxError(f"Unexpected character `{char}` at {i} in `{text}`")
                tokens.append(("ident", match.group(), i))
                i = match.end()
        return tokens

    def peek(self) -> 't.Optional[tuple[str, str, int]]':
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def expect(self, kind: 'str') -> 'tuple[str, str, int]':
        token = self.peek()
        if token is None or token[0] != kind:
            where = "end of input" if token is None else f"`{token[1]}` at {token[2]}"
            raise TermSyntaxError(f"Expected `{kind}` but found {where} in `{self.text}`")
        self.pos += 1
        return token

    def parse(self, text: 'str', env: 't.Optional[t.Mapping[str, Term]]' = None) -> 'Term':
        self.reset()
        self.text = text
        self.env = env or {}
        self.tokens = self.tokenize(text)
        if not self.tokens:
            raise TermSyntaxError("Empty term")

        ret = self.parse_term()
        if self.peek() is not None:
            token = self.peek()
            raise TermSyntaxError(f"Unexpected `{token[1]}` at {token[2]} in `{text}`")
        return ret

    def parse_term(self) -> 'Term':
        token = self.peek()
        if token is not None and token[0] == "lambda":
            return self.parse_lambda()
        return self.parse_application()

    def parse_lambda(self) -> 'Term':
        self.expect("lambda")
        names = [self.expect("ident")[1]]
        while self.peek() is not None and self.peek()[0] == "ident":
            names.append(self.expect("ident")[1])
        self.expect(".")

        self.bound.extend(names)
        body = self.parse_term()
        del self.bound[-len(names):]

        for name in reversed(names):
            body = Lam(name, body)
        return body

    def parse_application(self) -> 'Term':
        ret = None
        while True:
            token = self.peek()
            if token is None or token[0] in (")", "."):
                break
            if token[0] == "lambda":
                # a trailing abstraction extends as far right as possible
                arg = self.parse_lambda()
                ret = arg if ret is None else App(ret, arg)
                break

            arg = self.parse_atom()
            ret = arg if ret is None else App(ret, arg)

        if ret is None:
            token = self.peek()
            where = "end of input" if token is None else f"`{token[1]}` at {token[2]}"
            raise TermSyntaxError(f"Expected a term but found {where} in `{self.text}`")
        return ret

    def parse_atom(self) -> 'Term':
        token = self.peek()
        if token[0] == "(":
            self.pos += 1
            ret = self.parse_term()
            self.expect(")")
            return ret

        name = self.expect("ident")[1]
        if name in self.bound:
            return Var(name)
        if name in self.env:
            return self.env[name]
        if self.COMBINATORS_RE.fullmatch(name):
            ret = None
            for char in name:
                comb = S if char == "S" else K
                ret = comb if ret is None else App(ret, comb)
            return ret
        return Var(name)


def parse_term(text: 'str', env: 't.Optional[t.Mapping[str, Term]]' = None) -> 'Term':
    return TermParser().parse(text, env)
