from .term import (
    Term, Comb, Var, App, Lam, S, K, free_vars, substitute, is_normal, spine,
    prefix_key, terms_of_size, enumerate_terms,
)
from .reduce import (
    EvalBudget, Normal, BudgetExhausted, EvalOutcome, reduce, apply, apply_all, normal_form,
)
from .parser import TermParser, parse_term
from .bracket import bracket_abstract, compile_lambda, compile_text, IDENT
from .codes import (
    StandardCodes, standard_codes, underline, code, compose_codes, pair_of, first_of,
    second_of, FilterSpec, size_bounded_filter, observe, check_filter_closure,
    PAIR, FST, SND, TRUE, FALSE, ENV,
)

__all__ = [
    "Term", "Comb", "Var", "App", "Lam", "S", "K", "free_vars", "substitute", "is_normal",
    "spine", "prefix_key", "terms_of_size", "enumerate_terms",
    "EvalBudget", "Normal", "BudgetExhausted", "EvalOutcome", "reduce", "apply", "apply_all",
    "normal_form", "TermParser", "parse_term",
    "bracket_abstract", "compile_lambda", "compile_text", "IDENT",
    "StandardCodes", "standard_codes", "underline", "code", "compose_codes", "pair_of",
    "first_of", "second_of", "FilterSpec", "size_bounded_filter", "observe",
    "check_filter_closure", "PAIR", "FST", "SND", "TRUE", "FALSE", "ENV",
]
