from .problem import (
    FiniteProblem, ProblemReduction, container_of_problem, problem_of_container,
    problem_roundtrip_iso, reduce_problems, check_reduction, verify_reduction, compose_reductions,
)
from .extended import (
    ExtendedPredicate, ExtReductionWitness, check_ext_reduction, ext_reduce_verify,
    compose_ext_reductions, wlem, nabla_container, container_of_predicate, predicate_of_container,
    predicate_roundtrip_witnesses, container_roundtrip_morphisms, morphism_of_reduction,
    reduction_of_morphism, search_ext_reduction,
)
from .poset import DegreePoset, degree_poset, as_container

__all__ = [
    "FiniteProblem", "ProblemReduction", "container_of_problem", "problem_of_container",
    "problem_roundtrip_iso", "reduce_problems", "check_reduction", "verify_reduction",
    "compose_reductions",
    "ExtendedPredicate", "ExtReductionWitness", "check_ext_reduction", "ext_reduce_verify",
    "compose_ext_reductions", "wlem", "nabla_container", "container_of_predicate",
    "predicate_of_container", "predicate_roundtrip_witnesses", "container_roundtrip_morphisms",
    "morphism_of_reduction", "reduction_of_morphism", "search_ext_reduction",
    "DegreePoset", "degree_poset", "as_container",
]
