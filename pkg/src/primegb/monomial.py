"""Exponent-vector monomials and their prime encoding.

Variable ``x_i`` is assigned the ``i``-th prime (``x0 -> 2``, ``x1 -> 3``, ...),
so a monomial maps to the integer obtained by substituting those primes. By
unique factorization the map is injective and multiplicative, which turns
monomial divisibility, LCM and GCD into the integer versions of the same.
"""
from __future__ import annotations

import math
import operator
from functools import lru_cache
from typing import Iterable

import attrs
import sympy

from .errors import ArityMismatch, ForeignPrimeFactor, NotDivisible
from .validator import _exponents_validator, _positive_validator

__all__ = [
    "VarContext",
    "Monomial",
    "first_primes",
    "encode",
    "decode",
    "divides",
    "monomial_lcm",
    "monomial_gcd",
    "monomial_quotient",
    "divides_encoded",
    "lcm_encoded",
    "gcd_encoded",
]


@lru_cache(maxsize=None)
def first_primes(n: int) -> tuple[int, ...]:
    """The first ``n`` primes, starting at 2."""
    return tuple(int(sympy.prime(i)) for i in range(1, n + 1))


@lru_cache(maxsize=1 << 16)
def _encode(exponents: tuple[int, ...]) -> int:
    primes = first_primes(len(exponents))
    return math.prod(p**e for p, e in zip(primes, exponents))


def _to_exponents(value: Iterable[int]) -> tuple[int, ...]:
    return tuple(operator.index(e) for e in value)


@attrs.frozen(kw_only=True)
class VarContext:
    """Variables ``x0..x{num_vars-1}`` and their primes."""

    num_vars: int = attrs.field(validator=_positive_validator)

    @property
    def primes(self) -> tuple[int, ...]:
        return first_primes(self.num_vars)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(f"x{i}" for i in range(self.num_vars))


@attrs.frozen(kw_only=True)
class Monomial:
    exponents: tuple[int, ...] = attrs.field(
        converter=_to_exponents, validator=_exponents_validator
    )

    @classmethod
    def one(cls, num_vars: int) -> Monomial:
        return cls(exponents=(0,) * num_vars)

    @classmethod
    def variable(cls, index: int, num_vars: int, power: int = 1) -> Monomial:
        if not 0 <= index < num_vars:
            raise IndexError(f"variable index {index} out of range(0, {num_vars})")
        exponents = [0] * num_vars
        exponents[index] = power
        return cls(exponents=exponents)

    @property
    def num_vars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    @property
    def encoding(self) -> int:
        """Integer image under the prime assignment."""
        return _encode(self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented  # type: ignore
        _check_arity(self, other)
        return Monomial(
            exponents=tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def __str__(self) -> str:
        factors = [
            f"x{i}" if e == 1 else f"x{i}^{e}"
            for i, e in enumerate(self.exponents)
            if e
        ]
        return "*".join(factors) if factors else "1"


def _check_arity(a: Monomial, b: Monomial) -> None:
    if a.num_vars != b.num_vars:
        raise ArityMismatch(
            f"monomials over {a.num_vars} and {b.num_vars} variables"
        )


def encode(m: Monomial, ctx: VarContext) -> int:
    """Return ``prod(primes[i] ** exponents[i])``."""
    if m.num_vars != ctx.num_vars:
        raise ArityMismatch(
            f"monomial has {m.num_vars} exponents, context has {ctx.num_vars}"
        )
    return m.encoding


def decode(value: int, ctx: VarContext) -> Monomial:
    """Recover the monomial whose encoding is ``value``.

    Raises
    ------
    ForeignPrimeFactor
        If ``value`` has a prime factor that is not one of ``ctx.primes``.
    """
    if value < 1:
        raise ValueError(f"only positive integers encode monomials, got {value}")
    exponents = []
    rest = value
    for p in ctx.primes:
        e = int(sympy.multiplicity(p, rest))
        exponents.append(e)
        rest //= p**e
    if rest != 1:
        raise ForeignPrimeFactor(
            value, sorted(int(q) for q in sympy.primefactors(rest))
        )
    return Monomial(exponents=exponents)


def divides(d: Monomial, m: Monomial) -> bool:
    _check_arity(d, m)
    return all(a <= b for a, b in zip(d.exponents, m.exponents))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_arity(a, b)
    return Monomial(exponents=tuple(map(max, a.exponents, b.exponents)))


def monomial_gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_arity(a, b)
    return Monomial(exponents=tuple(map(min, a.exponents, b.exponents)))


def monomial_quotient(m: Monomial, d: Monomial) -> Monomial:
    """``m / d``; raises NotDivisible unless ``d`` divides ``m``."""
    if not divides(d, m):
        raise NotDivisible(f"{d} does not divide {m}")
    return Monomial(exponents=tuple(a - b for a, b in zip(m.exponents, d.exponents)))


# Integer-arithmetic versions. The componentwise functions above are the
# reference; these are kept to exercise the encoding correspondence.


def divides_encoded(d: Monomial, m: Monomial, ctx: VarContext) -> bool:
    return encode(m, ctx) % encode(d, ctx) == 0


def lcm_encoded(a: Monomial, b: Monomial, ctx: VarContext) -> Monomial:
    return decode(math.lcm(encode(a, ctx), encode(b, ctx)), ctx)


def gcd_encoded(a: Monomial, b: Monomial, ctx: VarContext) -> Monomial:
    return decode(math.gcd(encode(a, ctx), encode(b, ctx)), ctx)
