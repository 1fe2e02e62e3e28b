import pytest
from hypothesis import given, settings

from WeiContainers.finbase import (
    FinSetObj, FinMap, identity, compose, all_maps, is_surjective, is_bijection, inverse,
    pullback, mediating, product, pairing, coproduct, copairing, exponential, distributor,
    terminal, initial, terminal_map, SliceObj, sigma_along, reindex, pi_along, slice_homs,
    sigma_transpose, pi_transpose,
)
from WeiContainers.finbase.labels import (
    pair_label, split_pair, inl, split_tag, graph_label, parse_graph_label, set_label, parse_set_label,
)
from WeiContainers.errors import CodDomMismatch, DuplicateLabel, IllTyped, SquareDoesNotCommute

from .strategies import composable_maps, cospans

AB = FinSetObj.of("a", "b")
XYZ = FinSetObj.of("x", "y", "z")


def test_sets_are_sorted():
    assert FinSetObj.of("b", "a").elements == ("a", "b")
    assert str(FinSetObj.of("b", "a")) == "{a, b}"

def test_pair_labels_sort_by_component():
    assert FinSetObj.of("(a!,x)", "(a,x)").elements == ("(a,x)", "(a!,x)")
    assert FinSetObj.of("(K K,e)", "(K,e)", "z").elements == ("z", "(K,e)", "(K K,e)")
    assert FinSetObj.of("((a,b),c)", "(a,c)").elements == ("(a,c)", "((a,b),c)")

def test_duplicate_label():
    with pytest.raises(DuplicateLabel):
        FinSetObj.of("a", "a")

def test_unbalanced_label():
    with pytest.raises(ValueError):
        FinSetObj.of("(a")

def test_map_must_be_total():
    with pytest.raises(IllTyped):
        FinMap(AB, XYZ, {"a": "x"})
    with pytest.raises(IllTyped):
        FinMap(AB, XYZ, {"a": "x", "b": "w"})

def test_compose_mismatch():
    f = FinMap(AB, XYZ, {"a": "x", "b": "y"})
    with pytest.raises(CodDomMismatch):
        compose(f, f)

@given(composable_maps())
def test_identity_is_unit(fg):
    f, g = fg
    assert compose(identity(f.cod), f) == f
    assert compose(f, identity(f.dom)) == f
    assert compose(g, f).dom == f.dom

def test_all_maps_counts():
    assert len(list(all_maps(AB, XYZ))) == 9
    assert len(list(all_maps(FinSetObj(), XYZ))) == 1
    assert list(all_maps(AB, FinSetObj())) == []

def test_inverse():
    f = FinMap(AB, FinSetObj.of("p", "q"), {"a": "q", "b": "p"})
    assert is_bijection(f)
    assert compose(inverse(f), f) == identity(AB)


def test_pair_labels_split_back():
    label = pair_label("(a,b)", "inl:c")
    assert label == "((a,b),inl:c)"
    assert split_pair(label) == ("(a,b)", "inl:c")
    assert split_tag(inl("(a,b)")) == ("inl", "(a,b)")

def test_graph_and_set_labels():
    graph = {"x": "(a,b)", "y": "c"}
    assert parse_graph_label(graph_label(graph)) == graph
    assert set_label(["b", "a"]) == "{a;b}"
    assert parse_set_label("{a;b}") == ["a", "b"]


@given(cospans())
def test_pullback_square_commutes(fg):
    f, g = fg
    pb = pullback(f, g)
    assert compose(f, pb.proj1) == compose(g, pb.proj2)
    assert len(pb.apex) == sum(len(f.fiber(c)) * len(g.fiber(c)) for c in f.cod)

@given(cospans())
@settings(max_examples=50)
def test_mediating_is_unique(fg):
    f, g = fg
    pb = pullback(f, g)
    gamma = mediating(pb, pb.proj2, pb.proj1)
    assert gamma == identity(pb.apex)

def test_mediating_rejects_open_square():
    f = FinMap(AB, XYZ, {"a": "x", "b": "y"})
    pb = pullback(f, f)
    swap = FinMap(AB, AB, {"a": "b", "b": "a"})
    with pytest.raises(SquareDoesNotCommute):
        mediating(pb, swap, identity(AB))

def test_product_and_pairing():
    res = product(AB, XYZ)
    assert len(res.obj) == 6
    f = FinMap(AB, AB, {"a": "a", "b": "b"})
    g = FinMap(AB, XYZ, {"a": "z", "b": "x"})
    p = pairing(f, g)
    assert compose(res.proj1, p) == f
    assert compose(res.proj2, p) == g

def test_coproduct_and_copairing():
    res = coproduct(AB, XYZ)
    assert res.obj.elements[0] == "inl:a"
    f = FinMap(AB, AB, {"a": "b", "b": "a"})
    g = FinMap(XYZ, AB, {"x": "a", "y": "a", "z": "b"})
    c = copairing(f, g)
    assert compose(c, res.inl) == f
    assert compose(c, res.inr) == g

def test_terminal_and_initial():
    assert len(terminal()) == 1
    assert len(initial()) == 0
    assert is_surjective(terminal_map(AB))

def test_exponential_evaluation():
    res = exponential(AB, XYZ)
    assert len(res.obj) == 9
    fn = graph_label({"a": "z", "b": "x"})
    assert res.eval(pair_label(fn, "a")) == "z"
    assert res.eval(pair_label(fn, "b")) == "x"

def test_distributor_round_trip():
    there, back = distributor(AB, FinSetObj.of("c"), FinSetObj.of("d"))
    assert compose(back, there) == identity(there.dom)
    assert compose(there, back) == identity(back.dom)


def test_sigma_reindex_pi():
    f = FinMap(AB, FinSetObj.of("j"), {"a": "j", "b": "j"})
    a = SliceObj.of(FinMap(XYZ, AB, {"x": "a", "y": "a", "z": "b"}))
    assert len(sigma_along(f, a).total) == 3
    assert len(pi_along(f, a).total) == 2

    b = SliceObj.of(FinMap(FinSetObj.of("p", "q"), FinSetObj.of("j"), {"p": "j", "q": "j"}))
    assert len(reindex(f, b).total) == 4

def test_sigma_transpose_is_bijective():
    f = FinMap(AB, FinSetObj.of("j"), {"a": "j", "b": "j"})
    a = SliceObj.of(FinMap(FinSetObj.of("x", "y"), AB, {"x": "a", "y": "b"}))
    b = SliceObj.of(FinMap(FinSetObj.of("p", "q"), FinSetObj.of("j"), {"p": "j", "q": "j"}))
    pushed = sigma_along(f, a)
    pulled = reindex(f, b)

    homs = list(slice_homs(pushed, b))
    transposed = {sigma_transpose(f, a, b, h) for h in homs}
    assert len(transposed) == len(homs) == len(list(slice_homs(a, pulled)))

def test_pi_transpose_is_injective():
    f = FinMap(AB, FinSetObj.of("j"), {"a": "j", "b": "j"})
    g = SliceObj.of(FinMap(FinSetObj.of("p"), FinSetObj.of("j"), {"p": "j"}))
    a = SliceObj.of(FinMap(XYZ, AB, {"x": "a", "y": "a", "z": "b"}))
    pulled = reindex(f, g)
    homs = list(slice_homs(pulled, a))
    assert len({pi_transpose(f, g, a, h) for h in homs}) == len(homs) == 2
