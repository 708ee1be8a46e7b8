"""S-polynomials and the monomial-content reduction applied to them."""
from __future__ import annotations

from enum import Enum
from functools import reduce
from itertools import combinations
from typing import Sequence

import joblib

from .errors import ZeroPolynomial
from .monomial import Monomial, monomial_gcd, monomial_lcm
from .ordering import MonomialOrder, leading_term
from .polynomial import Polynomial, Term, divide_term, mul_term, sub

__all__ = [
    "ReductionMode",
    "s_polynomial",
    "all_s_polynomials",
    "reduce_polynomial",
]


class ReductionMode(Enum):
    """How S-polynomials are shrunk before being divided.

    ``Content`` divides by the GCD of the term monomials and collapses a
    single non-power term to 1; ``Off`` leaves polynomials alone.
    """

    Off = "off"
    Content = "paper"


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """``(L / LT(f)) * f - (L / LT(g)) * g`` with ``L = lcm(LM(f), LM(g))``.

    Raises
    ------
    ZeroPolynomial
        If ``f`` or ``g`` is zero.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("S-polynomial of the zero polynomial")
    lt_f = leading_term(f, order)
    lt_g = leading_term(g, order)
    lcm = Term(coeff=1, mono=monomial_lcm(lt_f.mono, lt_g.mono))
    return sub(
        mul_term(f, divide_term(lcm, lt_f)), mul_term(g, divide_term(lcm, lt_g))
    )


def _pairs(
    basis: Sequence[Polynomial], order: MonomialOrder, skip_coprime: bool
) -> list[tuple[int, int]]:
    pairs = list(combinations(range(len(basis)), 2))
    if not skip_coprime:
        return pairs
    lead = [leading_term(g, order).mono for g in basis]
    return [(i, j) for i, j in pairs if not monomial_gcd(lead[i], lead[j]).is_one]


def all_s_polynomials(
    basis: Sequence[Polynomial],
    order: MonomialOrder,
    *,
    skip_coprime: bool = False,
    n_jobs: int = 1,
) -> list[Polynomial]:
    """One S-polynomial per pair ``i < j``, in nested-loop order.

    Parameters
    ----------
    basis : Sequence[Polynomial]
        Nonzero polynomials.
    order : MonomialOrder
        Order defining leading terms.
    skip_coprime : bool, optional
        Leave out pairs whose leading monomials are coprime, by default False.
    n_jobs : int, optional
        joblib workers, by default 1. Results keep pair order either way.
    """
    pairs = _pairs(basis, order, skip_coprime)
    if n_jobs == 1 or len(pairs) < 2:
        return [s_polynomial(basis[i], basis[j], order) for i, j in pairs]
    results = joblib.Parallel(n_jobs=n_jobs)(
        joblib.delayed(s_polynomial)(basis[i], basis[j], order) for i, j in pairs
    )
    if results is None:
        raise ValueError("Joblib returned None.")
    return list(results)


def _is_bare_power(term: Term) -> bool:
    return term.coeff == 1 and sum(1 for e in term.mono.exponents if e) == 1


def reduce_polynomial(f: Polynomial, mode: ReductionMode) -> Polynomial:
    """Divide ``f`` by the monomial GCD of its terms.

    With ``ReductionMode.Content``, in this order:

    1. a polynomial with a nonzero constant term is returned unchanged;
    2. zero stays zero;
    3. a single term is returned unchanged if it is a bare power
       ``x_i^k``, and collapses to 1 otherwise;
    4. everything else is divided by the GCD of its monomials, coefficients
       untouched.

    ``ReductionMode.Off`` returns ``f``.
    """
    if mode is ReductionMode.Off:
        return f
    if f.constant_term != 0 or f.is_zero:
        return f
    if len(f.terms) == 1:
        if _is_bare_power(f.terms[0]):
            return f
        return Polynomial.one(f.ctx)
    content: Monomial = reduce(monomial_gcd, f.monomials)
    if content.is_one:
        return f
    divisor = Term(coeff=1, mono=content)
    # dividing every encoding by the same integer keeps the term order
    return Polynomial(
        ctx=f.ctx, terms=tuple(divide_term(t, divisor) for t in f.terms)
    )
