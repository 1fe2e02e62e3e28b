"""
Combinatory terms over ``S`` and ``K``.

Terms are immutable trees with a cached hash and size, so they can key
dictionaries and memo tables. ``Var`` atoms stand for free variables and are
stuck under reduction; ``Lam`` only exists between parsing and bracket
abstraction.
"""
import typing as t
import functools as ft


class Term:
    __slots__ = ("_hash", "size")

    def __init__(self, key: 't.Hashable', size: 'int'):
        self._hash = hash(key)
        self.size = size

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}<{self}>"

    def __call__(self, *args: 'Term') -> 'Term':
        ret = self
        for arg in args:
            ret = App(ret, arg)
        return ret

    @property
    def is_closed(self) -> 'bool':
        return not free_vars(self)


class Comb(Term):
    __slots__ = ("name",)

    def __init__(self, name: 't.Literal["S", "K"]'):
        if name not in ("S", "K"):
            raise ValueError(f"`{name}` is not a combinator")
        self.name = name
        super().__init__(("comb", name), 1)

    __hash__ = Term.__hash__

    def __eq__(self, other):
        return isinstance(other, Comb) and other.name == self.name

    def __str__(self):
        return self.name


class Var(Term):
    __slots__ = ("name",)

    def __init__(self, name: 'str'):
        self.name = name
        super().__init__(("var", name), 0)

    __hash__ = Term.__hash__

    def __eq__(self, other):
        return isinstance(other, Var) and other.name == self.name

    def __str__(self):
        return self.name


class App(Term):
    __slots__ = ("left", "right", "normal")

    def __init__(self, left: 'Term', right: 'Term', normal: 'bool' = False):
        self.left = left
        self.right = right
        # set by the reducer on terms it has rebuilt in normal form
        self.normal = normal
        super().__init__(("app", left._hash, right._hash), left.size + right.size)

    __hash__ = Term.__hash__

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, App) or other._hash != self._hash:
            return False

        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if isinstance(a, App) and isinstance(b, App):
                if a._hash != b._hash:
                    return False
                stack.append((a.left, b.left))
                stack.append((a.right, b.right))
            elif a != b:
                return False
        return True

    def __str__(self):
        left = f"({self.left})" if isinstance(self.left, Lam) else str(self.left)
        right = f"({self.right})" if isinstance(self.right, (App, Lam)) else str(self.right)
        return f"{left} {right}"


class Lam(Term):
    __slots__ = ("var", "body")

    def __init__(self, var: 'str', body: 'Term'):
        self.var = var
        self.body = body
        super().__init__(("lam", var, body._hash), body.size)

    __hash__ = Term.__hash__

    def __eq__(self, other):
        return isinstance(other, Lam) and other.var == self.var and other.body == self.body

    def __str__(self):
        return f"\\{self.var}. {self.body}"


S = Comb("S")
K = Comb("K")


def free_vars(term: 'Term') -> 'frozenset[str]':
    if isinstance(term, Var):
        return frozenset((term.name,))
    if isinstance(term, App):
        return free_vars(term.left) | free_vars(term.right)
    if isinstance(term, Lam):
        return free_vars(term.body) - {term.var}
    return frozenset()

def occurs(name: 'str', term: 'Term') -> 'bool':
    return name in free_vars(term)

def substitute(term: 'Term', name: 'str', value: 'Term') -> 'Term':
    """Replace the free variable ``name``; ``value`` is expected to be closed."""
    if isinstance(term, Var):
        return value if term.name == name else term
    if isinstance(term, App):
        return App(substitute(term.left, name, value), substitute(term.right, name, value))
    if isinstance(term, Lam):
        if term.var == name:
            return term
        return Lam(term.var, substitute(term.body, name, value))
    return term

def is_normal(term: 'Term') -> 'bool':
    """No ``K x y`` or ``S x y z`` redex anywhere in the tree."""
    stack = [term]
    while stack:
        current = stack.pop()
        if isinstance(current, Lam):
            return False

        head, args = spine(current)
        if isinstance(head, Comb) and len(args) >= (2 if head == K else 3):
            return False
        stack.extend(args)
    return True

def spine(term: 'Term') -> 'tuple[Term, list[Term]]':
    """Head and arguments, first argument first."""
    args = []
    while isinstance(term, App):
        args.append(term.right)
        term = term.left
    args.reverse()
    return term, args

def prefix_key(term: 'Term') -> 'tuple[int, ...]':
    """Preorder code with ``S < K < App``."""
    ret = []
    stack = [term]
    while stack:
        current = stack.pop()
        if isinstance(current, App):
            ret.append(2)
            stack.append(current.right)
            stack.append(current.left)
        elif current == S:
            ret.append(0)
        elif current == K:
            ret.append(1)
        else:
            raise ValueError(f"Only closed S/K terms have an enumeration key, got {current}")
    return tuple(ret)


@ft.lru_cache(maxsize=None)
def terms_of_size(size: 'int') -> 'tuple[Term, ...]':
    if size < 1:
        return ()
    if size == 1:
        return (S, K)

    ret = []
    for left_size in range(1, size):
        for left in terms_of_size(left_size):
            for right in terms_of_size(size - left_size):
                ret.append(App(left, right))
    ret.sort(key=prefix_key)
    return tuple(ret)

def enumerate_terms(max_size: 'int', min_size: 'int' = 1) -> 't.Iterator[Term]':
    """Closed S/K terms by size, then by ``prefix_key``."""
    for size in range(max(min_size, 1), max_size + 1):
        yield from terms_of_size(size)
