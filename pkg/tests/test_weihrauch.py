import pytest
from hypothesis import given, settings

from WeiContainers.weihrauch import (
    FiniteProblem, ProblemReduction, container_of_problem, problem_of_container, problem_roundtrip_iso,
    reduce_problems, check_reduction, verify_reduction, compose_reductions, ExtendedPredicate,
    ExtReductionWitness, check_ext_reduction, ext_reduce_verify, compose_ext_reductions, wlem,
    nabla_container, container_of_predicate, predicate_of_container, predicate_roundtrip_witnesses,
    container_roundtrip_morphisms, morphism_of_reduction, reduction_of_morphism, search_ext_reduction,
    degree_poset,
)
from WeiContainers.containers import (
    from_fibers, initial_container, terminal_container, identity_morphism, compose_morphisms,
    search_morphism, find_morphism, check_rep, MorphismRep,
)
from WeiContainers.assemblies import check_tracking
from WeiContainers.finbase import FinSetObj, FinMap
from WeiContainers.pca import App, K, IDENT, underline, code
from WeiContainers.laws import corpus
from WeiContainers.errors import IllTyped, NotAnswerable, KindMismatch

from .strategies import seeds

ZERO, ONE = underline(0), underline(1)


def test_problem_domain_and_validation():
    f = FiniteProblem.of({"a": ["0", "1"], "b": []}, outputs=["0", "1"])
    assert f.domain.elements == ("a",)
    assert f("b") == frozenset()
    with pytest.raises(IllTyped):
        FiniteProblem.of({"a": ["2"]}, outputs=["0"])
    with pytest.raises(IllTyped):
        FiniteProblem(FinSetObj.of("a"), FinSetObj.of("0"), {"b": frozenset()})

def test_container_of_problem():
    f = FiniteProblem.of({"a": ["0", "1"], "b": ["1"]})
    c = container_of_problem(f)
    assert c.fiber("a") == ("(a,0)", "(a,1)")
    g = problem_of_container(c)
    assert g("a") == {"(a,0)", "(a,1)"}
    assert g("b") == {"(b,1)"}

def test_problem_of_container_needs_answers():
    with pytest.raises(NotAnswerable):
        problem_of_container(terminal_container())
    with pytest.raises(KindMismatch):
        problem_of_container(nabla_container())

def test_reduce_problems():
    f = FiniteProblem.of({"a": ["0", "1"]})
    g = FiniteProblem.of({"b": ["0"], "c": ["0", "1"]})
    r = reduce_problems(f, g)
    assert r is not None
    assert verify_reduction(f, g, r)
    assert reduce_problems(f, FiniteProblem.of({})) is None

def test_check_reduction_reports_wrong_answers():
    f = FiniteProblem.of({"a": ["0"]}, outputs=["0", "1"])
    g = FiniteProblem.of({"b": ["0"]})
    phi = FinMap(f.domain, g.domain, {"a": "b"})
    psi = FinMap(FinSetObj.of("(a,0)"), f.outputs, {"(a,0)": "1"})
    errors = check_reduction(f, g, ProblemReduction(phi, psi))
    assert errors == ["`1` is not a solution of `a`"]

@given(seeds)
@settings(max_examples=50, deadline=None)
def test_reductions_compose(seed):
    f, g, h = (corpus.random_problem(seed + i) for i in range(3))
    r1, r2 = reduce_problems(f, g), reduce_problems(g, h)
    if r1 is None or r2 is None:
        return
    assert verify_reduction(f, h, compose_reductions(r1, r2, f))

@given(seeds)
@settings(max_examples=50, deadline=None)
def test_problem_round_trip(seed):
    p = corpus.random_container(seed, answerable=True)
    there, back = problem_roundtrip_iso(p)
    assert compose_morphisms(back, there) == identity_morphism(p)
    assert compose_morphisms(there, back) == identity_morphism(there.dst)

    f = corpus.random_problem(seed)
    g = problem_of_container(container_of_problem(f))
    assert reduce_problems(f, g) is not None
    assert reduce_problems(g, f) is not None


def test_predicate_validation():
    p = ExtendedPredicate.of({ZERO: [{ZERO}], ONE: []})
    assert p.support == (ZERO,)
    assert p(ONE) == frozenset()
    with pytest.raises(IllTyped):
        ExtendedPredicate.of({App(App(K, K), K): [{ZERO}]})

def test_wlem():
    p = wlem()
    assert p.support == (ZERO,)
    assert set(p.sets_of(ZERO)) == {frozenset({ZERO}), frozenset({ONE})}
    assert len(p(ZERO)) == 2

def test_container_of_wlem():
    h = container_of_predicate(wlem())
    assert h.kind == "pasm"
    assert len(h.positions) == 2
    assert [len(xs) for xs in h.fibers().values()] == [1, 1]
    assert {h.base.realizers_of(i) for i in h.positions} == {(ZERO,)}

def test_nabla_container_is_wlem():
    assert predicate_of_container(nabla_container()) == wlem()

@pytest.mark.parametrize("name", sorted(corpus.predicate_corpus()))
def test_predicate_round_trip_witnesses(name):
    p = corpus.predicate_corpus()[name]
    q = predicate_of_container(container_of_predicate(p))
    down, up = predicate_roundtrip_witnesses(p)
    assert check_ext_reduction(q, p, down) == []
    assert check_ext_reduction(p, q, up) == []
    assert ext_reduce_verify(p, p, compose_ext_reductions(up, down))

@pytest.mark.parametrize("name", sorted(corpus.predicate_corpus()))
def test_reductions_and_morphisms_correspond(name):
    p = corpus.predicate_corpus()[name]
    q = predicate_of_container(container_of_predicate(p))
    _, up = predicate_roundtrip_witnesses(p)
    m = morphism_of_reduction(p, q, up)
    assert m.src == container_of_predicate(p)
    assert m.dst == container_of_predicate(q)
    back = reduction_of_morphism(m)
    assert ext_reduce_verify(q, predicate_of_container(m.dst), back)

def test_container_round_trip():
    p = nabla_container()
    there, back = container_roundtrip_morphisms(p)
    assert there.dst == back.src
    assert compose_morphisms(back, there).forward_map == identity_morphism(p).forward_map

def _is_tracked(m):
    maps = (m.forward, m.backward)
    codes_track = all(check_tracking(f.src, f.dst, f.fn, f.code, f.budget) == [] for f in maps)
    return codes_track and check_rep(MorphismRep(m.src, m.dst, *maps)) == []

@pytest.mark.parametrize("name", sorted(corpus.predicate_corpus()))
def test_predicate_containers_round_trip_with_tracked_maps(name):
    p = corpus.predicate_corpus()[name]
    h = container_of_predicate(p)
    there, back = container_roundtrip_morphisms(h)
    assert there.src == back.dst == h
    assert _is_tracked(there)
    assert _is_tracked(back)
    assert _is_tracked(morphism_of_reduction(p, predicate_of_container(h), predicate_roundtrip_witnesses(p)[1]))

@pytest.mark.parametrize("name", ["point", "copy"])
def test_bounded_search_finds_the_container_round_trip(name):
    h = container_of_predicate(corpus.predicate_corpus()[name])
    there, _ = container_roundtrip_morphisms(h)
    assert find_morphism(h, there.dst, 7) is not None
    assert find_morphism(there.dst, h, 7) is not None

def test_witness_with_bad_answers_is_rejected():
    p = wlem()
    family = {(ZERO, theta): theta for theta in p(ZERO)}
    w = ExtReductionWitness(IDENT, family, code(r"\r s. zero"))
    errors = check_ext_reduction(p, p, w)
    assert len(errors) == 1
    assert not ext_reduce_verify(p, p, w)

def test_search_ext_reduction():
    w = search_ext_reduction(wlem(), wlem())
    assert w is not None
    assert ext_reduce_verify(wlem(), wlem(), w)


def test_pasm_asymmetry():
    id2 = corpus.id2_distinct()
    nabla = nabla_container()
    up = search_morphism(id2, nabla, 7)
    assert up.verdict == "REDUCIBLE"
    assert up.morphism.provenance["bound"] == 7
    down = search_morphism(nabla, id2, 7)
    assert down.verdict == "UNKNOWN-AT-BOUND"
    assert down.bound == 7


def test_degree_chain():
    items = {
        "initial": initial_container(),
        "id1": from_fibers({"v": ["z"]}),
        "terminal": terminal_container(),
    }
    poset = degree_poset(items)
    assert poset.classes == [("id1",), ("initial",), ("terminal",)]
    assert poset.hasse_edges() == [("id1", "terminal"), ("initial", "id1")]
    assert poset.leq("initial", "terminal")
    assert not poset.leq("terminal", "initial")
    assert poset.verdict("terminal", "id1") == "NOT-REDUCIBLE"
    assert poset.witness("initial", "id1") is not None

def test_degree_dot_is_deterministic():
    items = [("b", from_fibers({"u": ["x"]})), ("a", from_fibers({"u": ["x", "y"]})), ("c", terminal_container())]
    first = degree_poset(dict(items)).to_dot()
    second = degree_poset(dict(reversed(items))).to_dot()
    assert first == second
    assert "rankdir=BT" in first
    assert '"a" [label="a, b"]' in first or "a [label=\"a, b\"]" in first

def test_answerable_containers_collapse():
    items = {f"p{i}": corpus.random_container(i, answerable=True, nonempty=True) for i in range(6)}
    poset = degree_poset(items)
    assert len(poset.classes) == 1

def test_pasm_poset_marks_unknown_edges():
    poset = degree_poset({"id2": corpus.id2_distinct(), "wlem": nabla_container()}, bound=7)
    assert poset.verdict("id2", "wlem") == "REDUCIBLE"
    assert poset.verdict("wlem", "id2") == "UNKNOWN-AT-BOUND"
    dot = poset.to_dot()
    assert "dashed" in dot
    assert "bound 7" in dot

def test_degree_table():
    pytest.importorskip("pandas")
    poset = degree_poset({"a": initial_container(), "b": terminal_container()})
    table = poset.to_pandas()
    assert table.loc["a", "b"] == "REDUCIBLE"
    assert table.loc["b", "a"] == "NOT-REDUCIBLE"
