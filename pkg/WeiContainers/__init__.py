__version__ = "0.1.0"

from . import finbase, pca, assemblies, containers, operators, weihrauch, laws
from .finbase import FinSetObj, FinMap
from .pca import Term, EvalBudget, code, normal_form, compile_lambda
from .assemblies import Assembly, PartitionedAssembly, TrackedMap, nabla, track
from .containers import (
    Container, Morphism, make_container, from_fibers, identity_container, compose_morphisms,
    find_morphism, search_morphism, is_answerable, initial_container, terminal_container,
)
from .operators import coproduct, product, tensor, composition_product, composition_product_bounded, poly_eval, poly_cardinality
from .weihrauch import (
    FiniteProblem, ExtendedPredicate, container_of_problem, problem_of_container, reduce_problems,
    verify_reduction, container_of_predicate, predicate_of_container, ext_reduce_verify, wlem,
    nabla_container, degree_poset,
)
from .typing import Settings, DEFAULT_SETTINGS
from .utils import enable_debug_mode

__all__ = [
    "finbase", "pca", "assemblies", "containers", "operators", "weihrauch", "laws",
    "FinSetObj", "FinMap", "Term", "EvalBudget", "code", "normal_form", "compile_lambda",
    "Assembly", "PartitionedAssembly", "TrackedMap", "nabla", "track",
    "Container", "Morphism", "make_container", "from_fibers", "identity_container",
    "compose_morphisms", "find_morphism", "search_morphism", "is_answerable", "initial_container",
    "terminal_container",
    "coproduct", "product", "tensor", "composition_product", "composition_product_bounded", "poly_eval",
    "poly_cardinality",
    "FiniteProblem", "ExtendedPredicate", "container_of_problem", "problem_of_container",
    "reduce_problems", "verify_reduction", "container_of_predicate", "predicate_of_container", "ext_reduce_verify",
    "wlem", "nabla_container", "degree_poset", "Settings", "DEFAULT_SETTINGS", "enable_debug_mode", "__version__",
]
