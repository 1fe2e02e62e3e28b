from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, settings, strategies as st

from WeiContainers.pca import (
    Term, Var, App, S, K, is_normal, reduce, apply, apply_all, normal_form, EvalBudget, Normal,
    BudgetExhausted, parse_term, bracket_abstract, compile_text, IDENT, code, underline, pair_of,
    first_of, second_of, enumerate_terms, terms_of_size, size_bounded_filter, observe,
    check_filter_closure, standard_codes, TRUE, FALSE, FST, SND,
)
from WeiContainers.laws import corpus
from WeiContainers.errors import TermSyntaxError, UnboundVariable

OMEGA = code(r"(\x. x x) (\x. x x)")


def test_k_and_s_rules():
    x, y, z = Var("x"), Var("y"), Var("z")
    assert normal_form(K(x, y)) == x
    assert normal_form(S(x, y, z)) == x(z, y(z))

def test_identity():
    assert normal_form(IDENT(K)) == K
    assert reduce(IDENT(K)).steps == 2

def test_budget_exhaustion_is_a_value():
    outcome = reduce(OMEGA, EvalBudget(50))
    assert isinstance(outcome, BudgetExhausted)
    assert not outcome.is_normal
    assert outcome.steps == 50

def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        EvalBudget(0)

def test_normal_form_raises_without_fuel():
    with pytest.raises(ValueError):
        normal_form(OMEGA, EvalBudget(20))

def test_parse_combinator_runs():
    assert parse_term("SKK") == S(K, K)
    assert parse_term("S (K K) K") == S(K(K), K)
    assert str(S(K(K), S(K, K))) == "S (K K) (S K K)"

@pytest.mark.parametrize("text", ["", "(S K", "S )", "\\x x", "S # K"])
def test_parse_errors(text):
    with pytest.raises(TermSyntaxError):
        parse_term(text)

def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        compile_text(r"\x. y")

def test_bracket_abstraction_rules():
    assert bracket_abstract("x", Var("x")) == IDENT
    assert bracket_abstract("x", K) == K(K)
    assert bracket_abstract("x", App(Var("x"), K)) == S(IDENT, K(K))

def test_bracket_abstraction_keeps_eta_redexes():
    # no η rule: [x](K x) stays S (K K) I rather than collapsing to K
    assert bracket_abstract("x", App(K, Var("x"))) == S(K(K), IDENT)
    assert compile_text(r"\f. \x. f x") == S(S(K(S), S(K(K), IDENT)), K(IDENT))

def test_parse_term_is_reentrant():
    texts = [("a b", {"a": K, "b": S}), ("a a", {"a": S(K, K)}), ("SKK", None)] * 20
    expected = [App(K, S), App(S(K, K), S(K, K)), S(K, K)] * 20
    with ThreadPoolExecutor(max_workers=4) as pool:
        assert list(pool.map(lambda job: parse_term(*job), texts)) == expected

@given(st.integers(min_value=0, max_value=2**16), st.integers(min_value=1, max_value=6))
@settings(max_examples=50, deadline=None)
def test_bracket_abstraction_simulates_beta(seed, size):
    body = corpus.random_term(seed, size, ("x",))
    abstracted = bracket_abstract("x", body)
    lhs = reduce(abstracted(K), EvalBudget(200))
    rhs = reduce(_substitute(body, K), EvalBudget(200))
    if isinstance(lhs, Normal) and isinstance(rhs, Normal):
        assert lhs.term == rhs.term

def _substitute(term: 'Term', value: 'Term') -> 'Term':
    if isinstance(term, Var):
        return value
    if isinstance(term, App):
        return App(_substitute(term.left, value), _substitute(term.right, value))
    return term


@given(st.integers(min_value=0, max_value=2**16), st.integers(min_value=1, max_value=12))
@settings(max_examples=100, deadline=None)
def test_reduction_is_deterministic_and_monotone(seed, size):
    term = corpus.random_term(seed, size)
    small = reduce(term, EvalBudget(100))
    assert reduce(term, EvalBudget(100)) == small
    if isinstance(small, Normal):
        assert is_normal(small.term)
        assert reduce(term, EvalBudget(500)) == small


def test_pairing_laws():
    for a in enumerate_terms(3):
        for b in enumerate_terms(2):
            a_, b_ = normal_form(a), normal_form(b)
            w = pair_of(a_, b_)
            assert first_of(w) == a_
            assert second_of(w) == b_

def test_booleans_select():
    x, y = Var("x"), Var("y")
    assert normal_form(TRUE(x, y)) == x
    assert normal_form(FALSE(x, y)) == y
    assert underline(0) == FALSE
    assert underline(1) == TRUE
    with pytest.raises(ValueError):
        underline(2)

def test_standard_codes():
    codes = standard_codes()
    assert codes.fst == FST
    assert codes.snd == SND
    assert codes.ident == S(K, K)
    assert apply(codes.ident, K) == Normal(K, 2)

def test_apply_all_shares_budget():
    x, y = Var("x"), Var("y")
    assert apply_all(K, x, y) == Normal(x, 1)

def test_term_enumeration():
    assert terms_of_size(1) == (S, K)
    assert len(terms_of_size(2)) == 4
    assert len(terms_of_size(3)) == 16
    assert [t.size for t in enumerate_terms(3)] == [1] * 2 + [2] * 4 + [3] * 16

def test_filter_closure():
    terms = list(enumerate_terms(2))
    observed = observe(terms)
    assert check_filter_closure(size_bounded_filter(100), observed)
    assert not check_filter_closure(size_bounded_filter(2), [(S, K, S(K, K, K))])
