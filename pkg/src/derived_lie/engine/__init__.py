"""Derived Lie and super-Lie functors on graded objects, concretely and symbolically."""

from .derive import (
    LIE,
    SUPER,
    CrossTerm,
    cross_effect_expand,
    decalage_check,
    derive,
    derive_lie,
    derive_superlie,
)
from .dobject import DObject, Piece, derived_tensor, tensor_power
from .ecomplex import (
    UnvalidatedConstructionWarning,
    e_complex,
    e_complex_on,
    evaluate,
    filtration_e1,
    intro_prime_formula,
    squarefree_formula,
    theta,
    theta_dims,
    tilde_check,
)
from .special import special_n_dim, special_ns_dim
from .symbolic import FunctorAtom, FunctorExprGraded, Term, parse_expr, parse_term

__all__ = [
    "LIE",
    "SUPER",
    "CrossTerm",
    "DObject",
    "FunctorAtom",
    "FunctorExprGraded",
    "Piece",
    "Term",
    "UnvalidatedConstructionWarning",
    "cross_effect_expand",
    "decalage_check",
    "derive",
    "derive_lie",
    "derive_superlie",
    "derived_tensor",
    "e_complex",
    "e_complex_on",
    "evaluate",
    "filtration_e1",
    "intro_prime_formula",
    "parse_expr",
    "parse_term",
    "special_n_dim",
    "special_ns_dim",
    "squarefree_formula",
    "tensor_power",
    "theta",
    "theta_dims",
    "tilde_check",
]
