from __future__ import annotations

from logging import getLogger
from typing import Iterable, Optional, Sequence

from pandas import DataFrame
from tqdm import tqdm

from ..division import multivariate_divide
from ..errors import BuchbergerCriterionViolated, EmptyBasis, PassLimitExceeded
from ..monomial import divides
from ..ordering import MonomialOrder, leading_monomial, leading_term, polynomial_key
from ..polynomial import Polynomial
from ..spoly import all_s_polynomials, reduce_polynomial
from .dtypes import HISTORY_COLUMNS, BasisReport, BuchbergerConfig, Profile, Verdict

__all__ = [
    "buchberger",
    "solvability_verdict",
    "reduce_basis",
    "is_groebner_basis",
    "normal_form",
    "is_member",
]

logger = getLogger(__name__)


def _deduplicate(
    polynomials: Iterable[Polynomial], order: MonomialOrder
) -> list[Polynomial]:
    # canonical forms make structural equality exact
    unique = dict.fromkeys(p for p in polynomials if not p.is_zero)
    return sorted(unique, key=lambda p: polynomial_key(p, order))


def _verdict(basis: Iterable[Polynomial]) -> Verdict:
    if any(g.is_nonzero_constant for g in basis):
        return Verdict.Inconsistent
    return Verdict.Consistent


def buchberger(
    generators: Sequence[Polynomial], config: Optional[BuchbergerConfig] = None
) -> BasisReport:
    """Run the Buchberger loop until no S-polynomial leaves a remainder.

    Each pass computes every S-polynomial of the basis as it was at the
    start of the pass, reduces them according to ``config.reduction``,
    removes duplicates, and divides each survivor by the current basis,
    appending every nonzero remainder. The run stops at the first pass that
    appends nothing, or as soon as a nonzero constant shows up in the basis.

    Parameters
    ----------
    generators : Sequence[Polynomial]
        Nonempty; zero polynomials are dropped.
    config : BuchbergerConfig, optional
        Conservative profile with the prime order by default.

    Returns
    -------
    BasisReport
        Basis, pass count, contradiction flag and verdict.

    Raises
    ------
    PassLimitExceeded
        If ``config.max_passes`` passes ran without reaching a fixed point.
    BuchbergerCriterionViolated
        If a conservative run returns a basis failing the criterion.
    """
    if config is None:
        config = BuchbergerConfig()
    generators = tuple(generators)
    if not generators:
        raise ValueError("at least one generator is required")
    order = config.order

    basis = [g for g in generators if not g.is_zero]
    history: list[dict[str, int | bool]] = []
    passes = 0
    contradiction = False
    while True:
        if config.max_passes is not None and passes >= config.max_passes:
            raise PassLimitExceeded(config.max_passes)
        passes += 1

        s_polynomials = all_s_polynomials(
            tuple(basis),
            order,
            skip_coprime=config.skip_coprime_pairs,
            n_jobs=config.n_jobs,
        )
        unique = _deduplicate(
            (reduce_polynomial(s, config.reduction) for s in s_polynomials), order
        )

        appended = 0
        pbar = tqdm(unique, desc=f"pass {passes}", disable=not config.use_tqdm)
        for s in pbar:
            remainder = multivariate_divide(
                s, basis, order, max_steps=config.max_division_steps
            ).remainder
            if remainder.is_zero:
                continue
            basis.append(remainder)
            appended += 1
            logger.debug("pass %d appended %s", passes, remainder)
            if remainder.is_nonzero_constant:
                contradiction = True
                break
        contradiction = contradiction or _verdict(basis) is Verdict.Inconsistent

        history.append(
            {
                "s_polynomials": len(s_polynomials),
                "unique": len(unique),
                "appended": appended,
                "basis_size": len(basis),
                "contradiction": contradiction,
            }
        )
        logger.info(
            "pass %d: %d S-polynomials, %d unique, %d appended, basis size %d",
            passes,
            len(s_polynomials),
            len(unique),
            appended,
            len(basis),
        )
        if contradiction:
            logger.info("pass %d: nonzero constant in basis, stopping", passes)
            break
        if appended == 0:
            break

    if (
        config.profile is Profile.Conservative
        and config.check_criterion
        and not contradiction
        and not is_groebner_basis(basis, order)
    ):
        raise BuchbergerCriterionViolated(
            "a pairwise S-polynomial of the returned basis has a nonzero remainder"
        )

    return BasisReport(
        basis=basis,
        generators=generators,
        passes=passes,
        contradiction=contradiction,
        verdict=_verdict(basis),
        order=order,
        profile=config.profile,
        reduction=config.reduction,
        history=DataFrame(
            history,
            columns=HISTORY_COLUMNS,
            index=range(1, passes + 1),
        ).rename_axis("pass"),
    )


def solvability_verdict(report: BasisReport) -> Verdict:
    """Inconsistent iff the basis holds a nonzero constant.

    Consistent only means no certificate of non-existence was found; over an
    algebraically closed field it means a solution exists when the basis is
    a true Gröbner basis.
    """
    return _verdict(report.basis)


def is_groebner_basis(basis: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Every pairwise S-polynomial divides by ``basis`` to zero."""
    nonzero = [g for g in basis if not g.is_zero]
    return all(
        multivariate_divide(s, nonzero, order).remainder.is_zero
        for s in all_s_polynomials(nonzero, order)
    )


def normal_form(
    f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder
) -> Polynomial:
    """Remainder of ``f`` on division by ``basis``; unique when ``basis`` is a
    Gröbner basis."""
    nonzero = [g for g in basis if not g.is_zero]
    if not nonzero:
        return f
    return multivariate_divide(f, nonzero, order).remainder


def is_member(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Ideal membership, valid when ``basis`` is a Gröbner basis."""
    return normal_form(f, basis, order).is_zero


def _monic(f: Polynomial, order: MonomialOrder) -> Polynomial:
    return f.scale(1 / leading_term(f, order).coeff)


def reduce_basis(basis: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Reduced Gröbner basis of the ideal generated by a Gröbner basis.

    The result is monic, no monomial of an element is divisible by the
    leading monomial of another, and it is sorted ascending by leading
    monomial. It only depends on the ideal and the order.

    Raises
    ------
    EmptyBasis
        If ``basis`` has no nonzero element.
    """
    monic = [_monic(g, order) for g in basis if not g.is_zero]
    if not monic:
        raise EmptyBasis("cannot reduce an empty basis")
    monic.sort(key=lambda g: order.key(leading_monomial(g, order)))

    # a divisor of a leading monomial always sorts before it
    minimal: list[Polynomial] = []
    for g in monic:
        lm = leading_monomial(g, order)
        if not any(divides(leading_monomial(h, order), lm) for h in minimal):
            minimal.append(g)

    reduced = list(minimal)
    for i, g in enumerate(reduced):
        others = reduced[:i] + reduced[i + 1 :]
        if others:
            reduced[i] = multivariate_divide(g, others, order).remainder
    return reduced
