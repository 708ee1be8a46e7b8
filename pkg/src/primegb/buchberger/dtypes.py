from __future__ import annotations

from enum import Enum
from typing import Any, Optional

import attrs
from exceptiongroup import ExceptionGroup
from pandas import DataFrame

from ..ordering import PRIME, MonomialOrder, OrderKind
from ..polynomial import Polynomial
from ..spoly import ReductionMode

__all__ = ["Profile", "Verdict", "BuchbergerConfig", "BasisReport"]

HISTORY_COLUMNS = ["s_polynomials", "unique", "appended", "basis_size", "contradiction"]


class Profile(Enum):
    Faithful = "paper"
    Conservative = "conservative"


class Verdict(Enum):
    Inconsistent = "inconsistent"
    Consistent = "consistent"


@attrs.frozen(kw_only=True)
class BuchbergerConfig:
    """Settings of a Buchberger run.

    The faithful profile runs the prime order with monomial-content
    reduction of S-polynomials. The conservative profile never reduces and
    checks the Buchberger criterion on the result.

    Parameters
    ----------
    order : MonomialOrder
        Order defining leading terms, by default the prime order.
    reduction : ReductionMode
        What to do to S-polynomials before dividing them.
    max_passes : int, optional
        Raise PassLimitExceeded instead of starting pass ``max_passes + 1``.
    profile : Profile
        Faithful or conservative.
    skip_coprime_pairs : bool
        Leave out pairs with coprime leading monomials, by default False.
    n_jobs : int
        joblib workers for S-polynomial generation, by default 1.
    use_tqdm : bool
        Show a progress bar over the divisions of each pass.
    max_division_steps : int, optional
        Step ceiling for every single division.
    check_criterion : bool
        Verify the Buchberger criterion on conservative results.
    """

    order: MonomialOrder = PRIME
    reduction: ReductionMode = attrs.field(
        default=ReductionMode.Off, converter=ReductionMode
    )
    max_passes: Optional[int] = None
    profile: Profile = attrs.field(default=Profile.Conservative, converter=Profile)
    skip_coprime_pairs: bool = False
    n_jobs: int = 1
    use_tqdm: bool = False
    max_division_steps: Optional[int] = None
    check_criterion: bool = True

    def __attrs_post_init__(self) -> None:
        errors: list[ValueError] = []
        if self.profile is Profile.Faithful:
            if self.order.kind is not OrderKind.Prime:
                errors.append(
                    ValueError(
                        f"the {self.profile.value} profile needs the prime order, "
                        + f"got {self.order.name}"
                    )
                )
            if self.reduction is not ReductionMode.Content:
                errors.append(
                    ValueError(
                        f"the {self.profile.value} profile needs reduction "
                        + f"{ReductionMode.Content.value}, got {self.reduction.value}"
                    )
                )
        elif self.reduction is not ReductionMode.Off:
            errors.append(
                ValueError(
                    "the conservative profile needs reduction off, "
                    + f"got {self.reduction.value}"
                )
            )
        if self.max_passes is not None and not self.max_passes > 0:
            errors.append(ValueError("max_passes must be greater than 0"))
        if self.max_division_steps is not None and not self.max_division_steps > 0:
            errors.append(ValueError("max_division_steps must be greater than 0"))
        if self.n_jobs == 0:
            errors.append(ValueError("n_jobs must be not 0"))
        if errors:
            raise ExceptionGroup(
                "Invalid configuration" + str([e.args[0] for e in errors]), errors
            )

    @classmethod
    def faithful(cls, **kwargs: Any) -> BuchbergerConfig:
        return cls(
            profile=Profile.Faithful,
            order=PRIME,
            reduction=ReductionMode.Content,
            **kwargs,
        )

    @classmethod
    def conservative(
        cls, order: MonomialOrder = PRIME, **kwargs: Any
    ) -> BuchbergerConfig:
        return cls(
            profile=Profile.Conservative,
            order=order,
            reduction=ReductionMode.Off,
            **kwargs,
        )

    @classmethod
    def from_profile(
        cls, profile: Profile | str, *, order: MonomialOrder = PRIME, **kwargs: Any
    ) -> BuchbergerConfig:
        """Config for ``profile``; the reduction mode follows from it."""
        profile = Profile(profile)
        reduction = (
            ReductionMode.Content if profile is Profile.Faithful else ReductionMode.Off
        )
        return cls(profile=profile, order=order, reduction=reduction, **kwargs)


def _empty_history() -> DataFrame:
    return DataFrame(columns=HISTORY_COLUMNS).rename_axis("pass")


@attrs.frozen(kw_only=True)
class BasisReport:
    """Outcome of a Buchberger run.

    ``basis`` starts with the nonzero input generators, followed by the
    remainders in the order they were appended. ``history`` has one row per
    pass.
    """

    basis: tuple[Polynomial, ...] = attrs.field(converter=tuple)
    generators: tuple[Polynomial, ...] = attrs.field(converter=tuple)
    passes: int
    contradiction: bool
    verdict: Verdict
    order: MonomialOrder = PRIME
    profile: Profile = Profile.Conservative
    reduction: ReductionMode = ReductionMode.Off
    history: DataFrame = attrs.field(factory=_empty_history, eq=False, repr=False)

    @property
    def consistent(self) -> bool:
        return self.verdict is Verdict.Consistent

    @property
    def appended(self) -> tuple[Polynomial, ...]:
        return self.basis[sum(1 for g in self.generators if not g.is_zero) :]

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready summary; ``basis`` holds rendered polynomials."""
        return {
            "order": self.order.name,
            "profile": self.profile.value,
            "passes": self.passes,
            "contradiction": self.contradiction,
            "verdict": self.verdict.value,
            "basis": [str(g) for g in self.basis],
        }
