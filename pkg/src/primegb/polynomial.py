"""Sparse multivariate polynomials over the rationals.

A :class:`Polynomial` keeps its terms sorted strictly descending by prime
encoding of their monomials, with no repeated monomials and no zero
coefficients, so structural equality is mathematical equality. The term
order inside a polynomial never depends on the monomial order used for
leading terms.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Any, Iterable, Iterator, Mapping, Tuple, Union

import attrs
from attrs import Attribute

from .errors import ArityMismatch, NotDivisible
from .monomial import Monomial, VarContext, divides, monomial_quotient
from .validator import _nonzero_validator

__all__ = [
    "Coefficient",
    "Term",
    "Polynomial",
    "add",
    "sub",
    "negate",
    "mul",
    "mul_term",
    "divide_term",
]

Coefficient = Fraction
CoefficientLike = Union[int, Fraction, Rational, str]


def _to_coefficient(value: CoefficientLike) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"coefficients must be exact, got float {value}")
    return Fraction(value)  # type: ignore[arg-type]


@attrs.frozen(kw_only=True)
class Term:
    coeff: Fraction = attrs.field(
        converter=_to_coefficient, validator=_nonzero_validator
    )
    mono: Monomial

    def __mul__(self, other: Term) -> Term:
        if not isinstance(other, Term):
            return NotImplemented  # type: ignore
        return Term(coeff=self.coeff * other.coeff, mono=self.mono * other.mono)

    def __neg__(self) -> Term:
        return Term(coeff=-self.coeff, mono=self.mono)

    def __str__(self) -> str:
        from .parser import render_term

        return render_term(self)


def _canonical_validator(
    self: Polynomial, attribute: "Attribute[Any]", value: Tuple[Term, ...]
) -> None:
    previous = None
    for term in value:
        if term.mono.num_vars != self.ctx.num_vars:
            raise ArityMismatch(
                f"term {term} does not live in {self.ctx.num_vars} variables"
            )
        encoding = term.mono.encoding
        if previous is not None and encoding >= previous:
            raise ValueError(
                f"{attribute.name} must be strictly descending by encoding"
            )
        previous = encoding


@attrs.frozen(kw_only=True, repr=False)
class Polynomial:
    ctx: VarContext
    terms: Tuple[Term, ...] = attrs.field(
        default=(), converter=tuple, validator=_canonical_validator
    )

    @classmethod
    def zero(cls, ctx: VarContext) -> Polynomial:
        return cls(ctx=ctx)

    @classmethod
    def constant(cls, value: CoefficientLike, ctx: VarContext) -> Polynomial:
        return cls.from_mapping(
            ctx, {Monomial.one(ctx.num_vars): _to_coefficient(value)}
        )

    @classmethod
    def one(cls, ctx: VarContext) -> Polynomial:
        return cls.constant(1, ctx)

    @classmethod
    def variable(cls, index: int, ctx: VarContext) -> Polynomial:
        return cls.from_mapping(
            ctx, {Monomial.variable(index, ctx.num_vars): Fraction(1)}
        )

    @classmethod
    def from_mapping(
        cls, ctx: VarContext, mapping: Mapping[Monomial, CoefficientLike]
    ) -> Polynomial:
        """Canonical polynomial from a ``{monomial: coefficient}`` mapping.

        Zero coefficients are dropped.
        """
        items = [
            (mono, coeff)
            for mono, coeff in ((m, _to_coefficient(c)) for m, c in mapping.items())
            if coeff != 0
        ]
        items.sort(key=lambda item: item[0].encoding, reverse=True)
        return cls(
            ctx=ctx, terms=tuple(Term(coeff=c, mono=m) for m, c in items)
        )

    @classmethod
    def from_terms(cls, ctx: VarContext, terms: Iterable[Term]) -> Polynomial:
        """Sum of ``terms``; like monomials are combined."""
        mapping: dict[Monomial, Fraction] = {}
        for term in terms:
            mapping[term.mono] = mapping.get(term.mono, Fraction(0)) + term.coeff
        return cls.from_mapping(ctx, mapping)

    @property
    def num_vars(self) -> int:
        return self.ctx.num_vars

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        """True for the zero polynomial and for nonzero constants."""
        return self.is_zero or (len(self.terms) == 1 and self.terms[0].mono.is_one)

    @property
    def is_nonzero_constant(self) -> bool:
        return len(self.terms) == 1 and self.terms[0].mono.is_one

    @property
    def constant_term(self) -> Fraction:
        # The monomial 1 has the smallest encoding, so it can only be last.
        if self.terms and self.terms[-1].mono.is_one:
            return self.terms[-1].coeff
        return Fraction(0)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((t.mono.degree for t in self.terms), default=-1)

    @property
    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(t.mono for t in self.terms)

    def as_dict(self) -> dict[Monomial, Fraction]:
        return {t.mono: t.coeff for t in self.terms}

    def normalize(self) -> Polynomial:
        return Polynomial.from_mapping(self.ctx, self.as_dict())

    def scale(self, factor: CoefficientLike) -> Polynomial:
        factor = _to_coefficient(factor)
        if factor == 0:
            return Polynomial.zero(self.ctx)
        return Polynomial(
            ctx=self.ctx,
            terms=tuple(Term(coeff=t.coeff * factor, mono=t.mono) for t in self.terms),
        )

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented  # type: ignore
        return add(self, other)

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented  # type: ignore
        return sub(self, other)

    def __neg__(self) -> Polynomial:
        return negate(self)

    def __mul__(self, other: Polynomial | Term | int | Fraction) -> Polynomial:
        if isinstance(other, Polynomial):
            return mul(self, other)
        if isinstance(other, Term):
            return mul_term(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented  # type: ignore

    def __rmul__(self, other: int | Fraction) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented  # type: ignore

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError(f"negative power {exponent}")
        if len(self.terms) == 1:
            (t,) = self.terms
            mono = Monomial(exponents=tuple(e * exponent for e in t.mono.exponents))
            return Polynomial(
                ctx=self.ctx, terms=(Term(coeff=t.coeff**exponent, mono=mono),)
            )
        # square and multiply
        result, base = Polynomial.one(self.ctx), self
        while exponent:
            if exponent & 1:
                result = mul(result, base)
            exponent >>= 1
            if exponent:
                base = mul(base, base)
        return result

    def __str__(self) -> str:
        from .parser import render_polynomial

        return render_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, num_vars={self.num_vars})"


def _check_context(f: Polynomial, g: Polynomial) -> None:
    if f.ctx != g.ctx:
        raise ArityMismatch(
            f"polynomials over {f.num_vars} and {g.num_vars} variables"
        )


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_context(f, g)
    if g.is_zero:
        return f
    if f.is_zero:
        return g
    mapping = f.as_dict()
    for term in g.terms:
        mapping[term.mono] = mapping.get(term.mono, Fraction(0)) + term.coeff
    return Polynomial.from_mapping(f.ctx, mapping)


def negate(f: Polynomial) -> Polynomial:
    return Polynomial(ctx=f.ctx, terms=tuple(-t for t in f.terms))


def sub(f: Polynomial, g: Polynomial) -> Polynomial:
    return add(f, negate(g))


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_context(f, g)
    mapping: dict[Monomial, Fraction] = {}
    for a in f.terms:
        for b in g.terms:
            mono = a.mono * b.mono
            mapping[mono] = mapping.get(mono, Fraction(0)) + a.coeff * b.coeff
    return Polynomial.from_mapping(f.ctx, mapping)


def mul_term(f: Polynomial, t: Term) -> Polynomial:
    """Multiply every term of ``f`` by ``t``.

    Multiplying by a monomial multiplies every encoding by the same positive
    integer, so the canonical term order is kept as is.
    """
    if t.mono.num_vars != f.num_vars:
        raise ArityMismatch(f"term {t} does not live in {f.num_vars} variables")
    return Polynomial(ctx=f.ctx, terms=tuple(s * t for s in f.terms))


def divide_term(t1: Term, t2: Term) -> Term:
    """``t1 / t2``; raises NotDivisible unless ``t2.mono`` divides ``t1.mono``."""
    if not divides(t2.mono, t1.mono):
        raise NotDivisible(f"{t2} does not divide {t1}")
    return Term(coeff=t1.coeff / t2.coeff, mono=monomial_quotient(t1.mono, t2.mono))
