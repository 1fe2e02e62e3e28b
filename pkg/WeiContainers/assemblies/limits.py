"""
Finite limits and colimits of partitioned assemblies.

Pairs are realized by ``pair r s`` and coproduct elements by ``pair 0̲ r``
(left) or ``pair 1̲ r`` (right); every structure map comes with its code.
"""
import typing as t
from dataclasses import dataclass

from .assembly import PartitionedAssembly, Assembly, as_partitioned
from .tracking import TrackedMap, track
from ..finbase import limits as fl
from ..finbase.labels import split_pair, split_tag
from ..pca import Term, pair_of, underline, code, FST, SND, IDENT, K
from ..errors import UnverifiedInput, SquareDoesNotCommute, CodDomMismatch, UnverifiedTracking


@dataclass(frozen=True)
class PasmPullbackResult:
    apex: 'PartitionedAssembly'
    proj1: 'TrackedMap'
    proj2: 'TrackedMap'
    left: 'TrackedMap'
    right: 'TrackedMap'

    def __iter__(self):
        return iter((self.apex, self.proj1, self.proj2))

@dataclass(frozen=True)
class PasmProductResult:
    obj: 'PartitionedAssembly'
    proj1: 'TrackedMap'
    proj2: 'TrackedMap'

@dataclass(frozen=True)
class PasmCoproductResult:
    obj: 'PartitionedAssembly'
    inl: 'TrackedMap'
    inr: 'TrackedMap'


def _partitioned(a: 'Assembly', what: 'str') -> 'PartitionedAssembly':
    try:
        return as_partitioned(a)
    except ValueError:
        raise UnverifiedInput(f"{what} {a} is not partitioned")

def pair_realizers(a: 'PartitionedAssembly', b: 'PartitionedAssembly', labels: 't.Iterable[str]') -> 'dict[str, Term]':
    ret = {}
    for label in labels:
        x, y = split_pair(label)
        ret[label] = pair_of(a.realizer(x), b.realizer(y))
    return ret


def pasm_pullback(f: 'TrackedMap', g: 'TrackedMap') -> 'PasmPullbackResult':
    if not (f.verified and g.verified):
        raise UnverifiedInput("Both legs of a pullback must be verified tracked maps")
    if f.dst != g.dst:
        raise CodDomMismatch(f"Cannot pull back: codomains {f.dst} and {g.dst} differ")

    left = _partitioned(f.src, "Source")
    right = _partitioned(g.src, "Source")
    pb = fl.pullback(f.fn, g.fn)
    apex = PartitionedAssembly.from_codes(pair_realizers(left, right, pb.apex))
    return PasmPullbackResult(
        apex,
        track(apex, f.src, pb.proj1, FST),
        track(apex, g.src, pb.proj2, SND),
        f,
        g,
    )

def pasm_mediating(pb: 'PasmPullbackResult', alpha: 'TrackedMap', beta: 'TrackedMap') -> 'TrackedMap':
    """The mediator, tracked by ``λz. pair (e_beta z) (e_alpha z)``."""
    fin = fl.PullbackResult(pb.apex.carrier, pb.proj1.fn, pb.proj2.fn, pb.left.fn, pb.right.fn)
    gamma = fl.mediating(fin, alpha.fn, beta.fn)
    try:
        return track(alpha.src, pb.apex, gamma, code(r"\z. pair (b z) (a z)", a=alpha.code, b=beta.code),
                     alpha.budget + beta.budget)
    except UnverifiedTracking as e:
        raise SquareDoesNotCommute(f"Mediating map is not tracked by the paired codes: {e}")


def terminal() -> 'PartitionedAssembly':
    return PartitionedAssembly.from_codes({fl.TERMINAL_LABEL: underline(0)})

def initial() -> 'PartitionedAssembly':
    return PartitionedAssembly.from_codes({})

def terminal_map(a: 'Assembly') -> 'TrackedMap':
    return track(a, terminal(), fl.terminal_map(a.carrier), K(underline(0)))

def initial_map(a: 'Assembly') -> 'TrackedMap':
    return track(initial(), a, fl.initial_map(a.carrier), IDENT)


def product(a: 'PartitionedAssembly', b: 'PartitionedAssembly') -> 'PasmProductResult':
    fin = fl.product(a.carrier, b.carrier)
    obj = PartitionedAssembly.from_codes(pair_realizers(a, b, fin.obj))
    return PasmProductResult(obj, track(obj, a, fin.proj1, FST), track(obj, b, fin.proj2, SND))

def pairing(f1: 'TrackedMap', f2: 'TrackedMap') -> 'TrackedMap':
    obj = product(_partitioned(f1.dst, "Target"), _partitioned(f2.dst, "Target")).obj
    return track(f1.src, obj, fl.pairing(f1.fn, f2.fn),
                 code(r"\z. pair (c z) (d z)", c=f1.code, d=f2.code), f1.budget + f2.budget)

def product_map(f: 'TrackedMap', g: 'TrackedMap') -> 'TrackedMap':
    src = product(_partitioned(f.src, "Source"), _partitioned(g.src, "Source")).obj
    dst = product(_partitioned(f.dst, "Target"), _partitioned(g.dst, "Target")).obj
    return track(src, dst, fl.product_map(f.fn, g.fn),
                 code(r"\z. pair (c (fst z)) (d (snd z))", c=f.code, d=g.code), f.budget + g.budget)


def tagged_realizers(a: 'PartitionedAssembly', b: 'PartitionedAssembly', labels: 't.Iterable[str]') -> 'dict[str, Term]':
    ret = {}
    for label in labels:
        tag, x = split_tag(label)
        ret[label] = pair_of(underline(0), a.realizer(x)) if tag == "inl" else pair_of(underline(1), b.realizer(x))
    return ret

def coproduct(a: 'PartitionedAssembly', b: 'PartitionedAssembly') -> 'PasmCoproductResult':
    fin = fl.coproduct(a.carrier, b.carrier)
    obj = PartitionedAssembly.from_codes(tagged_realizers(a, b, fin.obj))
    return PasmCoproductResult(
        obj,
        track(a, obj, fin.inl, code(r"\x. pair zero x")),
        track(b, obj, fin.inr, code(r"\x. pair one x")),
    )

def copairing(f1: 'TrackedMap', f2: 'TrackedMap') -> 'TrackedMap':
    """``0̲`` selects its second argument, so the left branch comes last."""
    obj = coproduct(_partitioned(f1.src, "Source"), _partitioned(f2.src, "Source")).obj
    return track(obj, f1.dst, fl.copairing(f1.fn, f2.fn),
                 code(r"\w. fst w (d (snd w)) (c (snd w))", c=f1.code, d=f2.code), f1.budget + f2.budget)

def coproduct_map(f: 'TrackedMap', g: 'TrackedMap') -> 'TrackedMap':
    src = coproduct(_partitioned(f.src, "Source"), _partitioned(g.src, "Source")).obj
    dst = coproduct(_partitioned(f.dst, "Target"), _partitioned(g.dst, "Target")).obj
    return track(src, dst, fl.coproduct_map(f.fn, g.fn),
                 code(r"\w. fst w (pair one (d (snd w))) (pair zero (c (snd w)))", c=f.code, d=g.code),
                 f.budget + g.budget)


def pasm_distributor(
    a: 'PartitionedAssembly',
    b: 'PartitionedAssembly',
    c: 'PartitionedAssembly',
) -> 'tuple[TrackedMap, TrackedMap]':
    """``A × (B + C) ≅ A×B + A×C``; both directions swap the tag and the first component."""
    src = product(a, coproduct(b, c).obj).obj
    dst = coproduct(product(a, b).obj, product(a, c).obj).obj
    there, back = fl.distributor(a.carrier, b.carrier, c.carrier)
    swap = code(r"\w. pair (fst (snd w)) (pair (fst w) (snd (snd w)))")
    return track(src, dst, there, swap), track(dst, src, back, swap)

def pasm_right_distributor(
    a: 'PartitionedAssembly',
    b: 'PartitionedAssembly',
    c: 'PartitionedAssembly',
) -> 'tuple[TrackedMap, TrackedMap]':
    """``A×C + B×C ≅ (A + B) × C``"""
    src = coproduct(product(a, c).obj, product(b, c).obj).obj
    dst = product(coproduct(a, b).obj, c).obj
    there, back = fl.right_distributor(a.carrier, b.carrier, c.carrier)
    return (
        track(src, dst, there, code(r"\v. pair (pair (fst v) (fst (snd v))) (snd (snd v))")),
        track(dst, src, back, code(r"\w. pair (fst (fst w)) (pair (snd (fst w)) (snd w))")),
    )
