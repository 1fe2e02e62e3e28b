from .lattice import (
    lift_code, coproduct, coprojections, copairing, product, projections, pairing,
    distributivity, initial_container, terminal_container,
)
from .tensor import tensor, tensor_laws, TensorLaws
from .star import composition_product, composition_product_via_adjoints, composition_product_bounded
from .poly import (
    PolyEval, poly_eval, poly_cardinality, poly_map, morphism_to_nat_trans, naturality_check,
    star_eval_bijection, star_associativity_bijection, certifies_star_semantics,
)
from .exchange import strength_witness

__all__ = [
    "lift_code", "coproduct", "coprojections", "copairing", "product", "projections", "pairing",
    "distributivity", "initial_container", "terminal_container",
    "tensor", "tensor_laws", "TensorLaws",
    "composition_product", "composition_product_via_adjoints", "composition_product_bounded",
    "PolyEval", "poly_eval", "poly_cardinality", "poly_map", "morphism_to_nat_trans",
    "naturality_check", "star_eval_bijection", "star_associativity_bijection",
    "certifies_star_semantics", "strength_witness",
]
