from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import attrs

from .errors import DivisionStepLimitExceeded
from .monomial import Monomial, divides
from .ordering import MonomialOrder, leading_term
from .polynomial import Polynomial, Term, divide_term, mul_term, sub

__all__ = ["DivisionResult", "multivariate_divide"]


@attrs.frozen(kw_only=True)
class DivisionResult:
    """``f == sum(q * d for q, d in zip(quotients, divisors)) + remainder``."""

    quotients: tuple[Polynomial, ...] = attrs.field(converter=tuple)
    remainder: Polynomial


def multivariate_divide(
    f: Polynomial,
    divisors: Sequence[Polynomial],
    order: MonomialOrder,
    *,
    max_steps: Optional[int] = None,
) -> DivisionResult:
    """Divide ``f`` by an ordered list of divisors.

    Each step looks for the first divisor whose leading term divides the
    leading term of what is left of ``f``. If one exists the quotient term is
    recorded and the product subtracted, otherwise the leading term moves to
    the remainder. Zero divisors are skipped and get a zero quotient.

    Parameters
    ----------
    f : Polynomial
        Dividend.
    divisors : Sequence[Polynomial]
        Nonempty; the order matters.
    order : MonomialOrder
        Order defining leading terms.
    max_steps : int, optional
        Abort with DivisionStepLimitExceeded after this many steps.
        Unlimited by default; the loop always terminates.

    Returns
    -------
    DivisionResult
        Quotients aligned with ``divisors`` and the remainder.
    """
    if not divisors:
        raise ValueError("divisors must not be empty")
    lead: list[Optional[Term]] = [
        None if d.is_zero else leading_term(d, order) for d in divisors
    ]
    quotients: list[dict[Monomial, Fraction]] = [{} for _ in divisors]
    remainder: dict[Monomial, Fraction] = {}

    p = f
    steps = 0
    while not p.is_zero:
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise DivisionStepLimitExceeded(max_steps)
        lt_p = leading_term(p, order)
        for i, lt_fi in enumerate(lead):
            if lt_fi is None or not divides(lt_fi.mono, lt_p.mono):
                continue
            q = divide_term(lt_p, lt_fi)
            quotients[i][q.mono] = quotients[i].get(q.mono, Fraction(0)) + q.coeff
            p = sub(p, mul_term(divisors[i], q))
            break
        else:
            remainder[lt_p.mono] = lt_p.coeff
            p = sub(p, Polynomial(ctx=p.ctx, terms=(lt_p,)))

    return DivisionResult(
        quotients=tuple(Polynomial.from_mapping(f.ctx, q) for q in quotients),
        remainder=Polynomial.from_mapping(f.ctx, remainder),
    )
