import typing as t
import logging

from .lattice import product
from .star import composition_product
from ..containers import Container, Morphism, build_morphism, find_morphism, require_same_kind
from ..finbase.labels import pair_label, split_pair, graph_label, parse_graph_label, split_tag
from ..errors import KindMismatch, SearchSpaceExceeded

logger = logging.getLogger("WeiContainers")


def _explicit_strength(p: 'Container', q: 'Container', r: 'Container') -> 'Morphism':
    src = product(composition_product(p, q), r)
    dst = composition_product(product(p, r), q)

    def forward(label: 'str') -> 'str':
        position, w = split_pair(label)
        v, f = split_pair(position)
        f = parse_graph_label(f)
        ys = q.fiber(v)
        return pair_label(v, graph_label({y: pair_label(f[y], w) for y in ys}, ys))

    def backward(label: 'str') -> 'str':
        source, target = split_pair(label)
        position, w = split_pair(source)
        y, d = split_pair(split_pair(target)[1])
        tag, ab = split_tag(d)
        a, b = split_pair(ab)
        if tag == "inl":
            return f"inl:{pair_label(pair_label(position, pair_label(y, a)), w)}"
        return f"inr:{pair_label(position, b)}"

    return build_morphism(src, dst, forward, backward)

def strength_witness(p: 'Container', q: 'Container', r: 'Container', max_carrier: 'int' = 2) -> 'Morphism':
    """
    A morphism ``(P ★ Q) × R → (P × R) ★ Q``: the ``R`` question is carried
    along into every follow-up question to ``P``.
    """
    require_same_kind(p, q, r)
    if p.kind != "finset":
        raise KindMismatch("The composition product is only defined over finite sets")

    sizes = [max(len(c.positions), len(c.directions)) for c in (p, q, r)]
    if max(sizes) > max_carrier:
        raise SearchSpaceExceeded(f"Carriers of size {max(sizes)} exceed the limit of {max_carrier}")

    try:
        return _explicit_strength(p, q, r)
    except ValueError as e:
        logger.warning(f"Explicit strength map failed to validate ({e}), searching instead")

    src = product(composition_product(p, q), r)
    dst = composition_product(product(p, r), q)
    ret = find_morphism(src, dst)
    if ret is None:
        raise ValueError(f"No morphism {src} → {dst}")
    return ret
