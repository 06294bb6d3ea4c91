"""Buchberger's algorithm over prime fields, with the ideal-theoretic queries
used to verify node counts: normal forms, zero-dimensionality, quotient
degree, graded-piece dimensions and a separability certificate."""

from .basis import (
    DEFAULT_BUDGET,
    GroebnerBasis,
    buchberger,
    graded_piece_dim,
    is_zero_dimensional,
    minimal_polynomial,
    normal_form,
    quotient_degree,
    rank_mod_p,
    separability_check,
    standard_monomials,
)
from .kernel import available_backends, backend
from .orders import GREVLEX, LEX, BudgetExceededError, DegreeCapError, MonomialOrder

__all__ = [
    "DEFAULT_BUDGET",
    "GroebnerBasis",
    "buchberger",
    "graded_piece_dim",
    "is_zero_dimensional",
    "minimal_polynomial",
    "normal_form",
    "quotient_degree",
    "rank_mod_p",
    "separability_check",
    "standard_monomials",
    "available_backends",
    "backend",
    "GREVLEX",
    "LEX",
    "BudgetExceededError",
    "DegreeCapError",
    "MonomialOrder",
]
