import pytest
from hypothesis import given, settings, strategies as st

from WeiContainers.operators import (
    coproduct, coprojections, copairing, product, projections, pairing, distributivity, tensor,
    tensor_laws, composition_product, composition_product_via_adjoints, composition_product_bounded,
    poly_eval, poly_cardinality, poly_map, morphism_to_nat_trans, naturality_check,
    star_eval_bijection, star_associativity_bijection, certifies_star_semantics, strength_witness,
)
from WeiContainers.containers import (
    from_fibers, identity_container, identity_morphism, compose_morphisms, find_morphism,
    is_answerable, is_isomorphic, make_container, search_morphism, enumerate_morphisms,
)
from WeiContainers.assemblies import PartitionedAssembly, track
from WeiContainers.finbase.labels import split_pair
from WeiContainers.finbase import FinSetObj, FinMap, is_bijection, identity
from WeiContainers.pca import IDENT, underline
from WeiContainers.errors import KindMismatch, SearchSpaceExceeded

from .strategies import containers, answerable_containers, pasm_containers

P = from_fibers({"a": ["x"], "b": ["y", "z"]})
Q = from_fibers({"c": [], "d": ["w"]})
R = from_fibers({"e": ["v"]})
T = from_fibers({"e": ["v"], "f": []})
TWO = PartitionedAssembly.from_codes({"0": underline(0), "1": underline(1)})
ONE = PartitionedAssembly.from_codes({"*": underline(0)})


def test_coproduct_and_product_shapes():
    s = coproduct(P, Q)
    assert s.positions.elements == ("inl:a", "inl:b", "inr:c", "inr:d")
    assert len(s.directions) == 4

    m = product(P, Q)
    assert len(m.positions) == 4
    assert {u: len(xs) for u, xs in m.fibers().items()} == {"(a,c)": 1, "(a,d)": 2, "(b,c)": 2, "(b,d)": 3}

def test_tensor_shape():
    t_ = tensor(P, Q)
    assert {u: len(xs) for u, xs in t_.fibers().items()} == {"(a,c)": 0, "(a,d)": 1, "(b,c)": 0, "(b,d)": 2}

def test_coproduct_universal_property():
    i1, i2 = coprojections(P, Q)
    m1 = find_morphism(P, T)
    m2 = find_morphism(Q, T)
    c = copairing(m1, m2)
    assert compose_morphisms(c, i1) == m1
    assert compose_morphisms(c, i2) == m2
    assert copairing(i1, i2) == identity_morphism(coproduct(P, Q))

def test_product_universal_property():
    p1, p2 = projections(P, R)
    m1 = identity_morphism(P)
    m2 = find_morphism(P, R)
    pm = pairing(m1, m2)
    assert compose_morphisms(p1, pm) == m1
    assert compose_morphisms(p2, pm) == m2
    assert pairing(p1, p2) == identity_morphism(product(P, R))

@given(containers, containers, containers)
@settings(max_examples=30, deadline=None)
def test_distributivity_round_trip(p1, p2, q):
    there, back = distributivity(p1, p2, q)
    assert compose_morphisms(back, there) == identity_morphism(there.src)
    assert compose_morphisms(there, back) == identity_morphism(back.src)

@given(answerable_containers, answerable_containers)
@settings(max_examples=50, deadline=None)
def test_answerability_is_preserved(p, q):
    assert is_answerable(product(p, q))
    assert is_answerable(coproduct(p, q))
    assert is_answerable(tensor(p, q))

def test_tensor_laws_distribute_and_collect():
    laws = tensor_laws(P, Q, R)
    assert compose_morphisms(laws.collect, laws.distribute) == identity_morphism(laws.distribute.src)
    assert laws.strength.src == product(tensor(P, Q), R)


def test_composition_product_shape():
    pq = composition_product(P, Q)
    # d has one answer w, which picks a or b
    assert pq.positions.elements == ("(c,{})", "(d,{w↦a})", "(d,{w↦b})")
    assert len(pq.fiber("(d,{w↦b})")) == 2

@given(containers, containers)
@settings(max_examples=50, deadline=None)
def test_composition_product_cardinality(p, q):
    pq = composition_product(p, q)
    for n in range(3):
        assert poly_cardinality(pq, n) == poly_cardinality(q, poly_cardinality(p, n))

@given(containers, containers)
@settings(max_examples=30, deadline=None)
def test_composition_product_matches_adjoints(p, q):
    assert is_isomorphic(composition_product(p, q), composition_product_via_adjoints(p, q))

def test_star_semantics_certificates():
    for n in range(3):
        a = FinSetObj(tuple(f"a{i}" for i in range(n)))
        assert certifies_star_semantics(P, Q, a)
        assert len(poly_eval(composition_product(P, Q), a)) == poly_cardinality(Q, poly_cardinality(P, n))
    a = FinSetObj.of("a0")
    assert is_bijection(star_associativity_bijection(Q, R, Q, a))
    assert is_bijection(star_eval_bijection(R, P, a))

def test_composition_product_is_finite_only():
    with pytest.raises(KindMismatch):
        composition_product(identity_container(TWO), identity_container(TWO))
    with pytest.raises(KindMismatch):
        composition_product_bounded(P, Q)

def test_bounded_composition_product():
    p = identity_container(ONE)
    pq = composition_product_bounded(p, p, 7)
    assert pq.kind == "pasm"
    assert len(pq.positions) == 1
    assert len(pq.directions) == 1

@given(pasm_containers(), pasm_containers(), st.integers(min_value=1, max_value=4), st.integers(min_value=0, max_value=3))
@settings(max_examples=15, deadline=None)
def test_bounded_composition_product_grows_with_the_bound(p, q, bound, extra):
    small = composition_product_bounded(p, q, bound)
    large = composition_product_bounded(p, q, bound + extra)
    maps = [split_pair(u)[1] for u in small.positions]
    assert len(maps) == len(set(maps))
    assert set(maps) <= {split_pair(u)[1] for u in large.positions}
    assert set(small.positions) <= set(large.positions)
    assert find_morphism(small, large, bound=3) is not None

def test_larger_bound_can_add_unanswerable_positions():
    # X_0 is empty, and sending 1̲ to 0̲ takes a code larger than 3
    total = PartitionedAssembly.from_codes({"x": underline(1)})
    p = make_container(track(total, TWO, FinMap(total.carrier, TWO.carrier, {"x": "1"}), IDENT))
    q = identity_container(PartitionedAssembly.from_codes({"v": underline(1)}))
    small = composition_product_bounded(p, q, 3)
    large = composition_product_bounded(p, q, 5)
    assert len(small.positions) == 1 and is_answerable(small)
    assert len(large.positions) == 2 and not is_answerable(large)
    assert find_morphism(small, large, bound=3) is not None


def test_naturality():
    m = find_morphism(P, R)
    f = FinMap(FinSetObj.of("s", "t"), FinSetObj.of("k"), {"s": "k", "t": "k"})
    assert naturality_check(m, f)
    assert morphism_to_nat_trans(m, f.dom).dom == poly_eval(P, f.dom).result
    assert poly_map(P, identity(f.dom)) == identity(poly_eval(P, f.dom).result)

@given(containers, containers)
@settings(max_examples=20, deadline=None)
def test_nat_trans_separates_morphisms(p, q):
    a = FinSetObj(tuple(f"a{i}" for i in range(max([1, *map(len, p.fibers().values())]))))
    components = [morphism_to_nat_trans(m, a).graph for m in enumerate_morphisms(p, q)]
    assert len(set(components)) == len(components)

def test_strength_witness():
    m = strength_witness(R, Q, R)
    assert m.src == product(composition_product(R, Q), R)
    assert m.dst == composition_product(product(R, R), Q)
    with pytest.raises(SearchSpaceExceeded):
        strength_witness(from_fibers({"a": [], "b": [], "c": []}), Q, R)

@given(answerable_containers, containers, answerable_containers)
@settings(max_examples=10, deadline=None)
def test_strength_map_found_by_search(p, q, r):
    src = product(composition_product(p, q), r)
    dst = composition_product(product(p, r), q)
    assert search_morphism(src, dst).verdict == "REDUCIBLE"


def test_pasm_lattice_operators():
    p = identity_container(TWO)
    s = coproduct(p, p)
    m = product(p, p)
    assert s.kind == m.kind == "pasm"
    i1, _ = coprojections(p, p)
    assert i1.forward_map("0") == "inl:0"
    p1, _ = projections(p, p)
    assert p1.forward_map("(0,1)") == "0"
    assert len(tensor(p, p).positions) == 4
