"""Monomial orders and leading terms.

``OrderKind.Prime`` compares monomials by their prime encoding. The
classical orders use the variable priority ``x0 > x1 > ...``.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any, Tuple, Union

import attrs

from .errors import ZeroPolynomial
from .monomial import Monomial
from .polynomial import Polynomial, Term

__all__ = [
    "OrderKind",
    "Comparison",
    "MonomialOrder",
    "PRIME",
    "LEX",
    "GRLEX",
    "compare",
    "leading_term",
    "leading_monomial",
    "polynomial_key",
]

MonomialKey = Union[int, Tuple[int, ...]]


class OrderKind(Enum):
    Prime = "prime"
    Lex = "lex"
    GradedLex = "grlex"


class Comparison(Enum):
    Less = -1
    Equal = 0
    Greater = 1


@attrs.frozen
class MonomialOrder:
    kind: OrderKind = attrs.field(converter=OrderKind)

    @classmethod
    def from_name(cls, name: str) -> MonomialOrder:
        try:
            return cls(OrderKind(name))
        except ValueError:
            names = ", ".join(kind.value for kind in OrderKind)
            raise ValueError(
                f"unknown order {name!r}, expected one of {names}"
            ) from None

    @property
    def name(self) -> str:
        return self.kind.value

    def key(self, m: Monomial) -> MonomialKey:
        """Sort key; ``a`` precedes ``b`` iff ``key(a) < key(b)``."""
        if self.kind is OrderKind.Prime:
            return m.encoding
        if self.kind is OrderKind.Lex:
            return m.exponents
        return (m.degree,) + m.exponents

    def compare(self, a: Monomial, b: Monomial) -> Comparison:
        key_a, key_b = self.key(a), self.key(b)
        if key_a < key_b:  # type: ignore[operator]
            return Comparison.Less
        if key_a > key_b:  # type: ignore[operator]
            return Comparison.Greater
        return Comparison.Equal

    def sorted_terms(self, f: Polynomial) -> tuple[Term, ...]:
        """Terms of ``f``, largest first."""
        if self.kind is OrderKind.Prime:
            return f.terms
        return tuple(sorted(f.terms, key=lambda t: self.key(t.mono), reverse=True))


PRIME = MonomialOrder(OrderKind.Prime)
LEX = MonomialOrder(OrderKind.Lex)
GRLEX = MonomialOrder(OrderKind.GradedLex)


def compare(a: Monomial, b: Monomial, order: MonomialOrder) -> Comparison:
    return order.compare(a, b)


def leading_term(f: Polynomial, order: MonomialOrder) -> Term:
    """Maximal term of ``f`` under ``order``, coefficient included.

    Raises
    ------
    ZeroPolynomial
        If ``f`` is zero.
    """
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no leading term")
    if order.kind is OrderKind.Prime:
        # terms are already stored descending by encoding
        return f.terms[0]
    return max(f.terms, key=lambda t: order.key(t.mono))


def leading_monomial(f: Polynomial, order: MonomialOrder) -> Monomial:
    return leading_term(f, order).mono


def polynomial_key(f: Polynomial, order: MonomialOrder) -> tuple[Any, ...]:
    """Sort key of a whole polynomial: its terms largest first, each as
    ``(monomial key, coefficient)``."""
    return tuple(
        (order.key(t.mono), Fraction(t.coeff)) for t in order.sorted_terms(f)
    )
