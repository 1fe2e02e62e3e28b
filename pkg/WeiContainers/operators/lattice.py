"""
Products and coproducts of containers.

Over assemblies every structure map carries an explicit code on realizers:
pairs are ``pair r s`` and tagged elements ``pair 0̲ r`` / ``pair 1̲ r``.
"""
import typing as t

from ..containers import (
    Container, Morphism, BaseCategory, make_container, build_morphism, require_same_kind,
    initial_container, terminal_container,
)
from ..finbase.labels import pair_label, split_pair, inl, inr, split_tag
from ..pca import Term, code


def lift_code(cat: 'BaseCategory', text: 'str', **morphisms) -> 't.Optional[Term]':
    """Compile ``text`` with the codes of ``morphisms`` bound by name; nothing to do over sets."""
    if cat.kind != "pasm":
        return None
    return code(text, **{name: m if isinstance(m, Term) else m.code for name, m in morphisms.items()})


def coproduct(p: 'Container', q: 'Container') -> 'Container':
    """``P + Q : X + Y → U + V``"""
    cat = require_same_kind(p, q)
    return make_container(cat.coproduct_map(p.bundle, q.bundle))

def coprojections(p: 'Container', q: 'Container') -> 'tuple[Morphism, Morphism]':
    cat = require_same_kind(p, q)
    s = coproduct(p, q)

    def answer(label: 'str') -> 'str':
        return split_tag(split_pair(label)[1])[1]

    back = lift_code(cat, r"\w. snd (snd w)")
    left = build_morphism(p, s, inl, answer, lift_code(cat, r"\x. pair zero x"), back)
    right = build_morphism(q, s, inr, answer, lift_code(cat, r"\x. pair one x"), back)
    return left, right

def copairing(m1: 'Morphism', m2: 'Morphism') -> 'Morphism':
    """``[m1, m2] : P1 + P2 → Q``"""
    if m1.dst != m2.dst:
        raise ValueError("Copairing needs morphisms into the same container")
    cat = require_same_kind(m1.src, m2.src, m1.dst)
    s = coproduct(m1.src, m2.src)

    def forward(label: 'str') -> 'str':
        tag, u = split_tag(label)
        return (m1 if tag == "inl" else m2).forward_map(u)

    def backward(label: 'str') -> 'str':
        tagged, y = split_pair(label)
        tag, u = split_tag(tagged)
        m = m1 if tag == "inl" else m2
        x = m.backward_map(pair_label(u, y))
        return inl(x) if tag == "inl" else inr(x)

    return build_morphism(
        s, m1.dst, forward, backward,
        lift_code(cat, r"\w. fst w (c2 (snd w)) (c1 (snd w))", c1=m1.forward, c2=m2.forward),
        lift_code(
            cat,
            r"\w. fst (fst w) (pair one (b2 (pair (snd (fst w)) (snd w)))) (pair zero (b1 (pair (snd (fst w)) (snd w))))",
            b1=m1.backward, b2=m2.backward,
        ),
    )


def product(p: 'Container', q: 'Container') -> 'Container':
    """``P × Q : X × V + U × Y → U × V``, a question to each with an answer to one."""
    cat = require_same_kind(p, q)
    return make_container(cat.copairing(
        cat.product_map(p.bundle, cat.identity(q.base)),
        cat.product_map(cat.identity(p.base), q.bundle),
    ))

def projections(p: 'Container', q: 'Container') -> 'tuple[Morphism, Morphism]':
    cat = require_same_kind(p, q)
    s = product(p, q)

    def first_answer(label: 'str') -> 'str':
        uv, x = split_pair(label)
        return inl(pair_label(x, split_pair(uv)[1]))

    def second_answer(label: 'str') -> 'str':
        uv, y = split_pair(label)
        return inr(pair_label(split_pair(uv)[0], y))

    left = build_morphism(
        s, p, lambda uv: split_pair(uv)[0], first_answer,
        lift_code(cat, r"\z. fst z"),
        lift_code(cat, r"\w. pair zero (pair (snd w) (snd (fst w)))"),
    )
    right = build_morphism(
        s, q, lambda uv: split_pair(uv)[1], second_answer,
        lift_code(cat, r"\z. snd z"),
        lift_code(cat, r"\w. pair one (pair (fst (fst w)) (snd w))"),
    )
    return left, right

def pairing(m1: 'Morphism', m2: 'Morphism') -> 'Morphism':
    """``⟨m1, m2⟩ : R → P1 × P2``"""
    if m1.src != m2.src:
        raise ValueError("Pairing needs morphisms out of the same container")
    cat = require_same_kind(m1.src, m1.dst, m2.dst)
    s = product(m1.dst, m2.dst)

    def forward(w: 'str') -> 'str':
        return pair_label(m1.forward_map(w), m2.forward_map(w))

    def backward(label: 'str') -> 'str':
        w, d = split_pair(label)
        tag, ab = split_tag(d)
        a, b = split_pair(ab)
        if tag == "inl":
            return m1.backward_map(pair_label(w, a))
        return m2.backward_map(pair_label(w, b))

    return build_morphism(
        m1.src, s, forward, backward,
        lift_code(cat, r"\z. pair (c1 z) (c2 z)", c1=m1.forward, c2=m2.forward),
        lift_code(
            cat,
            r"\a. fst (snd a) (b2 (pair (fst a) (snd (snd (snd a))))) (b1 (pair (fst a) (fst (snd (snd a)))))",
            b1=m1.backward, b2=m2.backward,
        ),
    )


def distributivity(p1: 'Container', p2: 'Container', q: 'Container') -> 'tuple[Morphism, Morphism]':
    """
    ``(P1 × Q) + (P2 × Q) → (P1 + P2) × Q`` and its inverse. Directions on
    the left are ``S:T:(a,b)`` and on the right ``T:(S:a,b)``.
    """
    cat = require_same_kind(p1, p2, q)
    left = coproduct(product(p1, q), product(p2, q))
    right = product(coproduct(p1, p2), q)

    def gather(label: 'str') -> 'str':
        s, uv = split_tag(label)
        u, v = split_pair(uv)
        return pair_label(f"{s}:{u}", v)

    def scatter(label: 'str') -> 'str':
        su, v = split_pair(label)
        s, u = split_tag(su)
        return f"{s}:{pair_label(u, v)}"

    def to_left(label: 'str') -> 'str':
        # T:(S:a,b) ↦ S:T:(a,b)
        outer, ab = split_tag(split_pair(label)[1])
        sa, b = split_pair(ab)
        s, a = split_tag(sa)
        return f"{s}:{outer}:{pair_label(a, b)}"

    def to_right(label: 'str') -> 'str':
        s, rest = split_tag(split_pair(label)[1])
        outer, ab = split_tag(rest)
        a, b = split_pair(ab)
        return f"{outer}:{pair_label(f'{s}:{a}', b)}"

    there = build_morphism(
        left, right, gather, to_left,
        lift_code(cat, r"\v. pair (pair (fst v) (fst (snd v))) (snd (snd v))"),
        lift_code(cat, r"\w. pair (fst (fst (snd (snd w)))) (pair (fst (snd w)) (pair (snd (fst (snd (snd w)))) (snd (snd (snd w)))))"),
    )
    back = build_morphism(
        right, left, scatter, to_right,
        lift_code(cat, r"\w. pair (fst (fst w)) (pair (snd (fst w)) (snd w))"),
        lift_code(cat, r"\w. pair (fst (snd (snd w))) (pair (pair (fst (snd w)) (fst (snd (snd (snd w))))) (snd (snd (snd (snd w)))))"),
    )
    return there, back


__all__ = [
    "lift_code", "coproduct", "coprojections", "copairing", "product", "projections", "pairing",
    "distributivity", "initial_container", "terminal_container",
]
