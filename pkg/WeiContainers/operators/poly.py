"""
Containers as polynomial functors ``A ↦ Σ_u A^{X_u}`` on finite sets.
"""
import typing as t
import itertools as it
from dataclasses import dataclass

from .star import composition_product
from ..containers import Container, Morphism
from ..finbase import FinSetObj, FinMap, compose, inverse, is_bijection
from ..finbase.labels import pair_label, split_pair, graph_label, parse_graph_label
from ..errors import KindMismatch


@dataclass(frozen=True)
class PolyEval:
    container: 'Container'
    argument: 'FinSetObj'
    result: 'FinSetObj'

    def __len__(self):
        return len(self.result)


def _finite(*containers: 'Container'):
    for c in containers:
        if c.kind != "finset":
            raise KindMismatch("Polynomial semantics are computed over finite sets only")

def poly_label(u: 'str', g: 't.Mapping[str, str]', order: 't.Sequence[str]') -> 'str':
    return pair_label(u, graph_label(g, order))

def split_poly_label(label: 'str') -> 'tuple[str, dict[str, str]]':
    u, g = split_pair(label)
    return u, parse_graph_label(g)


def poly_eval(p: 'Container', a: 'FinSetObj') -> 'PolyEval':
    _finite(p)
    labels = []
    for u in p.positions:
        xs = p.fiber(u)
        for values in it.product(a.elements, repeat=len(xs)):
            labels.append(poly_label(u, dict(zip(xs, values)), xs))
    return PolyEval(p, a, FinSetObj(tuple(labels)))

def poly_cardinality(p: 'Container', n: 'int') -> 'int':
    return sum(n ** len(xs) for xs in p.fibers().values())

def poly_map(p: 'Container', f: 'FinMap') -> 'FinMap':
    """``(u, g) ↦ (u, f ∘ g)``"""
    src = poly_eval(p, f.dom).result
    dst = poly_eval(p, f.cod).result

    graph = {}
    for label in src:
        u, g = split_poly_label(label)
        graph[label] = poly_label(u, {x: f(a) for x, a in g.items()}, p.fiber(u))
    return FinMap(src, dst, graph)


def morphism_to_nat_trans(m: 'Morphism', a: 'FinSetObj') -> 'FinMap':
    """The component at ``A``: ``(u, g) ↦ (φ(u), g ∘ ψ_u)``."""
    _finite(m.src, m.dst)
    src = poly_eval(m.src, a).result
    dst = poly_eval(m.dst, a).result

    graph = {}
    for label in src:
        u, g = split_poly_label(label)
        v = m.forward_map(u)
        ys = m.dst.fiber(v)
        graph[label] = poly_label(v, {y: g[m.backward_map(pair_label(u, y))] for y in ys}, ys)
    return FinMap(src, dst, graph)

def naturality_check(m: 'Morphism', f: 'FinMap') -> 'bool':
    left = compose(morphism_to_nat_trans(m, f.cod), poly_map(m.src, f))
    right = compose(poly_map(m.dst, f), morphism_to_nat_trans(m, f.dom))
    return left == right


def star_eval_bijection(p: 'Container', q: 'Container', a: 'FinSetObj') -> 'FinMap':
    """
    ``⟦P ★ Q⟧(A) → ⟦Q⟧(⟦P⟧(A))``: an answer assignment over ``(v, f)`` splits
    into one over each ``f(y)``.
    """
    _finite(p, q)
    pq = composition_product(p, q)
    src = poly_eval(pq, a).result
    inner = poly_eval(p, a).result
    dst = poly_eval(q, inner).result

    graph = {}
    for label in src:
        position, g = split_poly_label(label)
        v, f = split_pair(position)
        f = parse_graph_label(f)
        ys = q.fiber(v)

        h = {}
        for y in ys:
            xs = p.fiber(f[y])
            h[y] = poly_label(f[y], {x: g[pair_label(position, pair_label(y, x))] for x in xs}, xs)
        graph[label] = poly_label(v, h, ys)
    return FinMap(src, dst, graph)

def star_associativity_bijection(p: 'Container', q: 'Container', r: 'Container', a: 'FinSetObj') -> 'FinMap':
    """``⟦(P ★ Q) ★ R⟧(A) → ⟦P ★ (Q ★ R)⟧(A)``, both read as ``⟦R⟧(⟦Q⟧(⟦P⟧(A)))``."""
    pq = composition_product(p, q)
    qr = composition_product(q, r)

    left = compose(
        poly_map(r, star_eval_bijection(p, q, a)),
        star_eval_bijection(pq, r, a),
    )
    right = compose(
        star_eval_bijection(q, r, poly_eval(p, a).result),
        star_eval_bijection(p, qr, a),
    )
    return compose(inverse(right), left)

def certifies_star_semantics(p: 'Container', q: 'Container', a: 'FinSetObj') -> 'bool':
    return is_bijection(star_eval_bijection(p, q, a))
