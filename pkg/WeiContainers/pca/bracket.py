import typing as t

from .term import Term, App, Var, Lam, S, K, occurs, free_vars
from .parser import parse_term
from ..errors import UnboundVariable

IDENT = S(K, K)


def bracket_abstract(var: 'str', body: 'Term') -> 'Term':
    """
    ``[x]x = S K K``; ``[x]t = K t`` when ``x`` is not free in ``t``;
    ``[x](t u) = S ([x]t) ([x]u)``.
    """
    if isinstance(body, Lam):
        body = compile_lambda(body, closed=False)

    if isinstance(body, Var) and body.name == var:
        return IDENT
    if not occurs(var, body):
        return App(K, body)
    if isinstance(body, App):
        return S(bracket_abstract(var, body.left), bracket_abstract(var, body.right))
    raise UnboundVariable(f"Cannot abstract `{var}` out of {body}")

def compile_lambda(term: 'Term', closed: 'bool' = True) -> 'Term':
    """Replace every abstraction by its S/K code, innermost first."""
    if isinstance(term, Lam):
        ret = bracket_abstract(term.var, compile_lambda(term.body, closed=False))
    elif isinstance(term, App):
        ret = App(compile_lambda(term.left, closed=False), compile_lambda(term.right, closed=False))
    else:
        ret = term

    if closed:
        unbound = free_vars(ret)
        if unbound:
            raise UnboundVariable(f"Variables {sorted(unbound)} are not bound in {term}")
    return ret

def compile_text(text: 'str', env: 't.Optional[t.Mapping[str, Term]]' = None, closed: 'bool' = True) -> 'Term':
    return compile_lambda(parse_term(text, env), closed=closed)
