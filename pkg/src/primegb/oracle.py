"""Brute-force ground truth for solvability.

Nothing here goes through division, S-polynomials or leading terms: a
polynomial is only ever evaluated.
"""
from __future__ import annotations

import math
from fractions import Fraction
from logging import getLogger
from typing import Sequence

import joblib
import numpy as np
from numpy.typing import NDArray
from tqdm import tqdm

from .errors import ArityMismatch, TooManyVariables
from .monomial import Monomial, VarContext
from .polynomial import CoefficientLike, Polynomial, _to_coefficient

__all__ = [
    "MAX_BOOLEAN_VARIABLES",
    "evaluate",
    "boolean_solutions",
    "field_equations",
    "has_field_equations",
]

MAX_BOOLEAN_VARIABLES = 20

logger = getLogger(__name__)


def evaluate(f: Polynomial, point: Sequence[CoefficientLike]) -> Fraction:
    """Exact value of ``f`` with ``x_i = point[i]``.

    Raises
    ------
    ArityMismatch
        If ``len(point) != f.num_vars``.
    """
    if len(point) != f.num_vars:
        raise ArityMismatch(
            f"point has {len(point)} coordinates, polynomial has {f.num_vars} "
            + "variables"
        )
    values = [_to_coefficient(v) for v in point]
    total = Fraction(0)
    for t in f.terms:
        total += t.coeff * math.prod(
            (v**e for v, e in zip(values, t.mono.exponents) if e), start=Fraction(1)
        )
    return total


def _vanishes(f: Polynomial, bits: NDArray[np.bool_]) -> NDArray[np.bool_]:
    # On {0,1} points a term is its coefficient where every variable of its
    # support is 1, and 0 elsewhere. Integer coefficients keep the sum exact.
    scale = math.lcm(*(t.coeff.denominator for t in f.terms)) if f.terms else 1
    values = np.zeros(len(bits), dtype=object)
    for t in f.terms:
        support = [i for i, e in enumerate(t.mono.exponents) if e]
        mask = bits[:, support].all(axis=1)
        values[mask] += int(t.coeff * scale)
    return values == 0  # type: ignore[no-any-return]


def _solve_range(
    F: Sequence[Polynomial], num_vars: int, indices: NDArray[np.int64]
) -> list[tuple[int, ...]]:
    # x0 is the most significant bit, so increasing indices are
    # lexicographically increasing points
    shifts = np.arange(num_vars - 1, -1, -1, dtype=np.int64)
    bits = ((indices[:, None] >> shifts) & 1).astype(bool)
    ok = np.ones(len(indices), dtype=bool)
    for f in F:
        ok &= _vanishes(f, bits)
        if not ok.any():
            break
    return [tuple(int(b) for b in row) for row in bits[ok]]


def boolean_solutions(
    F: Sequence[Polynomial],
    ctx: VarContext,
    *,
    n_jobs: int = 1,
    chunks: int = 16,
    use_tqdm: bool = False,
) -> list[tuple[int, ...]]:
    """Every point of ``{0,1}^n`` where all of ``F`` vanish.

    Parameters
    ----------
    F : Sequence[Polynomial]
        Polynomials over ``ctx``.
    ctx : VarContext
        At most ``MAX_BOOLEAN_VARIABLES`` variables.
    n_jobs : int, optional
        joblib workers, by default 1.
    chunks : int, optional
        Number of point ranges the enumeration is split into, by default 16.
    use_tqdm : bool, optional
        Show a progress bar over the ranges, by default False.

    Returns
    -------
    list[tuple[int, ...]]
        Solutions in lexicographic order.

    Raises
    ------
    TooManyVariables
        If ``ctx.num_vars > MAX_BOOLEAN_VARIABLES``.
    ArityMismatch
        If a polynomial does not live in ``ctx``.
    """
    if ctx.num_vars > MAX_BOOLEAN_VARIABLES:
        raise TooManyVariables(
            f"{ctx.num_vars} variables, at most {MAX_BOOLEAN_VARIABLES} "
            + "can be enumerated"
        )
    for f in F:
        if f.ctx != ctx:
            raise ArityMismatch(
                f"polynomial over {f.num_vars} variables, context has {ctx.num_vars}"
            )
    F = [f for f in F if not f.is_zero]
    total = 1 << ctx.num_vars
    ranges = [
        r for r in np.array_split(np.arange(total, dtype=np.int64), chunks) if len(r)
    ]
    logger.debug("enumerating %d points in %d ranges", total, len(ranges))
    pbar = tqdm(ranges, desc="oracle", disable=not use_tqdm)
    if n_jobs == 1:
        parts = [_solve_range(F, ctx.num_vars, r) for r in pbar]
    else:
        results = joblib.Parallel(n_jobs=n_jobs)(
            joblib.delayed(_solve_range)(F, ctx.num_vars, r) for r in pbar
        )
        if results is None:
            raise ValueError("Joblib returned None.")
        parts = list(results)
    return [point for part in parts for point in part]


def field_equations(ctx: VarContext) -> list[Polynomial]:
    """``x_i^2 - x_i`` for every variable, in variable order."""
    return [
        Polynomial.from_mapping(
            ctx,
            {
                Monomial.variable(i, ctx.num_vars, power=2): 1,
                Monomial.variable(i, ctx.num_vars): -1,
            },
        )
        for i in range(ctx.num_vars)
    ]


def has_field_equations(F: Sequence[Polynomial], ctx: VarContext) -> bool:
    """Whether a nonzero multiple of every ``x_i^2 - x_i`` is in ``F``."""
    # x_i^2 has the larger encoding, so it comes first
    monic = {f.scale(1 / f.terms[0].coeff) for f in F if not f.is_zero}
    return all(eq in monic for eq in field_equations(ctx))
