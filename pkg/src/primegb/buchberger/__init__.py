from .algorithm import (
    buchberger,
    is_groebner_basis,
    is_member,
    normal_form,
    reduce_basis,
    solvability_verdict,
)
from .dtypes import BasisReport, BuchbergerConfig, Profile, Verdict

__all__ = [
    "buchberger",
    "solvability_verdict",
    "reduce_basis",
    "is_groebner_basis",
    "normal_form",
    "is_member",
    "BasisReport",
    "BuchbergerConfig",
    "Profile",
    "Verdict",
]
