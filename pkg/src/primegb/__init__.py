__version__ = "0.1.0"
from .buchberger import (
    BasisReport,
    BuchbergerConfig,
    Profile,
    Verdict,
    buchberger,
    is_groebner_basis,
    is_member,
    normal_form,
    reduce_basis,
    solvability_verdict,
)
from .division import DivisionResult, multivariate_divide
from .monomial import Monomial, VarContext, decode, encode
from .oracle import boolean_solutions, evaluate
from .ordering import GRLEX, LEX, PRIME, MonomialOrder, OrderKind, leading_term
from .parser import SystemFile, load_system, parse_polynomial, parse_system
from .polynomial import Polynomial, Term
from .spoly import ReductionMode, reduce_polynomial, s_polynomial

__all__ = [
    "BasisReport",
    "BuchbergerConfig",
    "Profile",
    "Verdict",
    "buchberger",
    "is_groebner_basis",
    "is_member",
    "normal_form",
    "reduce_basis",
    "solvability_verdict",
    "DivisionResult",
    "multivariate_divide",
    "Monomial",
    "VarContext",
    "decode",
    "encode",
    "boolean_solutions",
    "evaluate",
    "GRLEX",
    "LEX",
    "PRIME",
    "MonomialOrder",
    "OrderKind",
    "leading_term",
    "SystemFile",
    "load_system",
    "parse_polynomial",
    "parse_system",
    "Polynomial",
    "Term",
    "ReductionMode",
    "reduce_polynomial",
    "s_polynomial",
]
