import typing as t
import itertools as it
from dataclasses import dataclass

from .sets import FinSetObj, FinMap, compose
from .labels import pair_label, split_pair, inl, inr, split_tag, graph_label, parse_graph_label
from ..errors import CodDomMismatch, SquareDoesNotCommute

TERMINAL_LABEL = "*"


@dataclass(frozen=True)
class PullbackResult:
    apex: 'FinSetObj'
    proj1: 'FinMap'
    proj2: 'FinMap'
    left: 'FinMap'
    right: 'FinMap'

@dataclass(frozen=True)
class ProductResult:
    obj: 'FinSetObj'
    proj1: 'FinMap'
    proj2: 'FinMap'

@dataclass(frozen=True)
class CoproductResult:
    obj: 'FinSetObj'
    inl: 'FinMap'
    inr: 'FinMap'

@dataclass(frozen=True)
class ExponentialResult:
    obj: 'FinSetObj'
    eval: 'FinMap'


def pullback(f: 'FinMap', g: 'FinMap') -> 'PullbackResult':
    """Fiber product of ``f: A → C`` and ``g: B → C``; the apex is ``{(a,b) | f(a) = g(b)}``."""
    if f.cod != g.cod:
        raise CodDomMismatch(f"Cannot pull back: codomains {f.cod} and {g.cod} differ")

    by_value: 'dict[str, list[str]]' = {}
    for b in g.dom:
        by_value.setdefault(g.graph[b], []).append(b)

    p1, p2 = {}, {}
    for a in f.dom:
        for b in by_value.get(f.graph[a], ()):
            label = pair_label(a, b)
            p1[label] = a
            p2[label] = b

    apex = FinSetObj(tuple(p1))
    return PullbackResult(apex, FinMap(apex, f.dom, p1), FinMap(apex, g.dom, p2), f, g)

def mediating(pb: 'PullbackResult', alpha: 'FinMap', beta: 'FinMap') -> 'FinMap':
    """The unique ``γ`` with ``proj2 ∘ γ = alpha`` and ``proj1 ∘ γ = beta``."""
    if alpha.dom != beta.dom or beta.cod != pb.left.dom or alpha.cod != pb.right.dom:
        raise SquareDoesNotCommute("Cone legs are not typed against the pullback")

    graph = {}
    for z in alpha.dom:
        label = pair_label(beta.graph[z], alpha.graph[z])
        if label not in pb.apex:
            raise SquareDoesNotCommute(f"Cone at `{z}` lands on `{label}` which is not in the apex")
        graph[z] = label
    return FinMap(alpha.dom, pb.apex, graph)


def terminal() -> 'FinSetObj':
    return FinSetObj((TERMINAL_LABEL,))

def initial() -> 'FinSetObj':
    return FinSetObj()

def terminal_map(a: 'FinSetObj') -> 'FinMap':
    return FinMap(a, terminal(), {x: TERMINAL_LABEL for x in a})

def initial_map(a: 'FinSetObj') -> 'FinMap':
    return FinMap(initial(), a, {})


def product(a: 'FinSetObj', b: 'FinSetObj') -> 'ProductResult':
    pairs = {pair_label(x, y): (x, y) for x, y in it.product(a, b)}
    obj = FinSetObj(tuple(pairs))
    return ProductResult(
        obj,
        FinMap(obj, a, {k: v[0] for k, v in pairs.items()}),
        FinMap(obj, b, {k: v[1] for k, v in pairs.items()}),
    )

def pairing(f1: 'FinMap', f2: 'FinMap') -> 'FinMap':
    if f1.dom != f2.dom:
        raise CodDomMismatch(f"Cannot pair maps with domains {f1.dom} and {f2.dom}")
    obj = product(f1.cod, f2.cod).obj
    return FinMap(f1.dom, obj, {z: pair_label(f1.graph[z], f2.graph[z]) for z in f1.dom})

def product_map(f: 'FinMap', g: 'FinMap') -> 'FinMap':
    """``f × g``"""
    src = product(f.dom, g.dom)
    return pairing(compose(f, src.proj1), compose(g, src.proj2))


def coproduct(a: 'FinSetObj', b: 'FinSetObj') -> 'CoproductResult':
    obj = FinSetObj(tuple(inl(x) for x in a) + tuple(inr(y) for y in b))
    return CoproductResult(
        obj,
        FinMap(a, obj, {x: inl(x) for x in a}),
        FinMap(b, obj, {y: inr(y) for y in b}),
    )

def copairing(f1: 'FinMap', f2: 'FinMap') -> 'FinMap':
    if f1.cod != f2.cod:
        raise CodDomMismatch(f"Cannot copair maps with codomains {f1.cod} and {f2.cod}")
    obj = coproduct(f1.dom, f2.dom).obj
    graph = {}
    for label in obj:
        tag, x = split_tag(label)
        graph[label] = f1.graph[x] if tag == "inl" else f2.graph[x]
    return FinMap(obj, f1.cod, graph)

def coproduct_map(f: 'FinMap', g: 'FinMap') -> 'FinMap':
    """``f + g``"""
    dst = coproduct(f.cod, g.cod)
    return copairing(compose(dst.inl, f), compose(dst.inr, g))


def exponential(a: 'FinSetObj', b: 'FinSetObj') -> 'ExponentialResult':
    """``B^A`` with elements named by their full function graphs."""
    functions = [dict(zip(a.elements, values)) for values in it.product(b.elements, repeat=len(a))]
    obj = FinSetObj(tuple(graph_label(f, a.elements) for f in functions))
    src = product(obj, a)

    graph = {}
    for label in src.obj:
        fn, x = split_pair(label)
        graph[label] = parse_graph_label(fn)[x]
    return ExponentialResult(obj, FinMap(src.obj, b, graph))


def distributor(a: 'FinSetObj', b: 'FinSetObj', c: 'FinSetObj') -> 'tuple[FinMap, FinMap]':
    """The canonical ``A × (B + C) → A×B + A×C`` and its inverse."""
    src = product(a, coproduct(b, c).obj).obj
    dst = coproduct(product(a, b).obj, product(a, c).obj).obj

    forward = {}
    for label in src:
        x, tagged = split_pair(label)
        tag, y = split_tag(tagged)
        forward[label] = f"{tag}:{pair_label(x, y)}"

    there = FinMap(src, dst, forward)
    back = FinMap(dst, src, {v: k for k, v in forward.items()})
    return there, back

def right_distributor(a: 'FinSetObj', b: 'FinSetObj', c: 'FinSetObj') -> 'tuple[FinMap, FinMap]':
    """The canonical ``A×C + B×C → (A + B) × C`` and its inverse."""
    src = coproduct(product(a, c).obj, product(b, c).obj).obj
    dst = product(coproduct(a, b).obj, c).obj

    forward = {}
    for label in src:
        tag, pair = split_tag(label)
        x, z = split_pair(pair)
        forward[label] = pair_label(f"{tag}:{x}", z)

    there = FinMap(src, dst, forward)
    back = FinMap(dst, src, {v: k for k, v in forward.items()})
    return there, back
