import pytest
from hypothesis import given, settings

from WeiContainers.containers import (
    Container, MorphismRep, from_fibers, identity_container, initial_container,
    terminal_container, require_same_kind, build_morphism, check_rep, validate_rep, normalize,
    canonical_pullback, identity_morphism, compose_morphisms, factorize, is_answerable, fiber_profile,
    is_isomorphic, search_morphism, find_morphism, enumerate_morphisms,
)
from WeiContainers.assemblies import PartitionedAssembly
from WeiContainers.finbase import FinSetObj, FinMap
from WeiContainers.pca import underline, IDENT
from WeiContainers.laws import corpus
from WeiContainers.errors import InvalidRep, KindMismatch, TypeMismatch, IllTyped

from .strategies import seeds, containers

ID2 = from_fibers({"0": ["0"], "1": ["1"]})
SPLIT = from_fibers({"u": ["x", "y"]})
ID1 = from_fibers({"v": ["z"]})


def test_fibers_and_positions():
    p = from_fibers({"u0": ["x0", "x1"], "u1": []})
    assert p.positions.elements == ("u0", "u1")
    assert p.directions.elements == ("x0", "x1")
    assert p.fiber("u1") == ()
    assert str(p) == "finset{u0: [x0, x1], u1: []}"
    assert p.kind == "finset"

def test_container_needs_a_bundle():
    with pytest.raises(IllTyped):
        Container({"u": "x"})

def test_answerability():
    assert is_answerable(ID2)
    assert is_answerable(initial_container())
    assert not is_answerable(terminal_container())
    assert len(terminal_container().positions) == 1

def test_kinds_do_not_mix():
    two = PartitionedAssembly.from_codes({"0": underline(0), "1": underline(1)})
    with pytest.raises(KindMismatch):
        require_same_kind(ID2, identity_container(two))


def test_id2_reduces_to_terminal():
    result = search_morphism(ID2, terminal_container())
    assert result.found
    assert result.verdict == "REDUCIBLE"

def test_terminal_does_not_reduce_to_id2():
    result = search_morphism(terminal_container(), ID2)
    assert not result.found
    assert result.definitive
    assert result.verdict == "NOT-REDUCIBLE"

def test_enumerate_morphisms():
    assert len(list(enumerate_morphisms(ID1, ID1))) == 1
    assert len(list(enumerate_morphisms(SPLIT, ID1))) == 2
    assert len(list(enumerate_morphisms(ID1, SPLIT))) == 1
    assert list(enumerate_morphisms(terminal_container(), ID1)) == []

@given(containers, containers)
@settings(max_examples=100, deadline=None)
def test_find_morphism_agrees_with_enumeration(p, q):
    found = find_morphism(p, q)
    assert (found is not None) == any(True for _ in enumerate_morphisms(p, q))

def test_fiber_profile_decides_isomorphism():
    assert fiber_profile(from_fibers({"a": ["x"], "b": []})) == (0, 1)
    assert is_isomorphic(from_fibers({"a": ["x"], "b": []}), from_fibers({"c": [], "d": ["y"]}))
    assert not is_isomorphic(ID2, SPLIT)


def test_backward_map_must_stay_in_the_fiber():
    p = from_fibers({"a": ["x"], "b": ["y"]})
    forward = FinMap(p.positions, ID1.positions, {"a": "v", "b": "v"})
    pb = canonical_pullback(ID1, forward)
    wrong = FinMap(pb.apex, p.directions, {"(a,z)": "y", "(b,z)": "y"})
    rep = MorphismRep(p, ID1, forward, wrong)
    assert not validate_rep(rep)
    assert check_rep(rep)
    with pytest.raises(InvalidRep):
        normalize(rep)

def test_alternative_apex_is_normalized():
    p = from_fibers({"a": ["x"]})
    forward = FinMap(p.positions, ID1.positions, {"a": "v"})
    apex = FinSetObj.of("w")
    rep = MorphismRep(
        p, ID1, forward,
        backward=FinMap(apex, p.directions, {"w": "x"}),
        apex_base=FinMap(apex, p.positions, {"w": "a"}),
        apex_total=FinMap(apex, ID1.directions, {"w": "z"}),
    )
    m = normalize(rep)
    assert m == build_morphism(p, ID1, {"a": "v"}, {"(a,z)": "x"})


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_category_laws(seed):
    f, g, h = corpus.composable_triple(seed)
    assert compose_morphisms(h, compose_morphisms(g, f)) == compose_morphisms(compose_morphisms(h, g), f)
    assert compose_morphisms(identity_morphism(f.dst), f) == f
    assert compose_morphisms(f, identity_morphism(f.src)) == f

@given(seeds)
@settings(max_examples=40, deadline=None)
def test_factorization(seed):
    f, _, _ = corpus.composable_triple(seed)
    h, v = factorize(f)
    assert v.is_vertical
    assert compose_morphisms(h, v) == f

def test_composition_checks_endpoints():
    m = identity_morphism(ID2)
    with pytest.raises(TypeMismatch):
        compose_morphisms(m, identity_morphism(SPLIT))


def test_pasm_identity_morphism():
    two = PartitionedAssembly.from_codes({"0": underline(0), "1": underline(1)})
    p = identity_container(two)
    assert p.kind == "pasm"
    m = identity_morphism(p)
    assert compose_morphisms(m, m) == m

def test_pasm_build_morphism_verifies_codes():
    two = PartitionedAssembly.from_codes({"0": underline(0), "1": underline(1)})
    p = identity_container(two)
    with pytest.raises(ValueError):
        build_morphism(p, p, {"0": "1", "1": "0"}, {"(0,1)": "0", "(1,0)": "1"}, IDENT, IDENT)
