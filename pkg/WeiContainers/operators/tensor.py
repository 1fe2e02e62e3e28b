import typing as t
from dataclasses import dataclass

from .lattice import lift_code, coproduct, product
from ..containers import Container, Morphism, make_container, build_morphism, require_same_kind
from ..finbase.labels import pair_label, split_pair, split_tag


def tensor(p: 'Container', q: 'Container') -> 'Container':
    """``P ⊗ Q : X × Y → U × V``; both questions are asked and both answered."""
    cat = require_same_kind(p, q)
    return make_container(cat.product_map(p.bundle, q.bundle))


@dataclass(frozen=True)
class TensorLaws:
    distribute: 'Morphism'
    collect: 'Morphism'
    strength: 'Morphism'

# (x, T:y) and T:(x, y) swap into each other with one code
SWAP = r"\w. pair (fst (snd w)) (pair (fst w) (snd (snd w)))"
SWAP_ANSWER = r"\w. pair (fst (snd (snd w))) (pair (fst (snd w)) (snd (snd (snd w))))"

def _tag_out(label: 'str') -> 'str':
    x, tagged = split_pair(label)
    tag, y = split_tag(tagged)
    return f"{tag}:{pair_label(x, y)}"

def _tag_in(label: 'str') -> 'str':
    tag, xy = split_tag(label)
    x, y = split_pair(xy)
    return pair_label(x, f"{tag}:{y}")

def tensor_laws(p: 'Container', q: 'Container', r: 'Container') -> 'TensorLaws':
    """
    ``P ⊗ (Q + R) ≅ P ⊗ Q + P ⊗ R`` in both directions and the map
    ``(P ⊗ Q) × R → P ⊗ (Q × R)`` answering ``R``'s questions directly and
    ``Q``'s together with the answer to ``P``.
    """
    cat = require_same_kind(p, q, r)

    joint = tensor(p, coproduct(q, r))
    split = coproduct(tensor(p, q), tensor(p, r))
    distribute = build_morphism(
        joint, split, _tag_out, lambda label: _tag_in(split_pair(label)[1]),
        lift_code(cat, SWAP), lift_code(cat, SWAP_ANSWER),
    )
    collect = build_morphism(
        split, joint, _tag_in, lambda label: _tag_out(split_pair(label)[1]),
        lift_code(cat, SWAP), lift_code(cat, SWAP_ANSWER),
    )

    def associate(label: 'str') -> 'str':
        uv, w = split_pair(label)
        u, v = split_pair(uv)
        return pair_label(u, pair_label(v, w))

    def answer(label: 'str') -> 'str':
        x, d = split_pair(split_pair(label)[1])
        tag, ab = split_tag(d)
        a, b = split_pair(ab)
        if tag == "inl":
            return f"inl:{pair_label(pair_label(x, a), b)}"
        return f"inr:{pair_label(pair_label(p.map(x), a), b)}"

    strength = build_morphism(
        product(tensor(p, q), r), tensor(p, product(q, r)), associate, answer,
        lift_code(cat, r"\w. pair (fst (fst w)) (pair (snd (fst w)) (snd w))"),
        lift_code(
            cat,
            r"\a. pair (fst (snd (snd a))) (pair (pair (fst (snd (snd a)) (e (fst (snd a))) (fst (snd a))) (fst (snd (snd (snd a))))) (snd (snd (snd (snd a)))))",
            e=p.bundle,
        ),
    )
    return TensorLaws(distribute, collect, strength)
