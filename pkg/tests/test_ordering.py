from __future__ import annotations

from fractions import Fraction
from itertools import product
from unittest import TestCase

import numpy as np

from primegb.errors import ZeroPolynomial
from primegb.monomial import Monomial, VarContext
from primegb.ordering import (
    GRLEX,
    LEX,
    PRIME,
    Comparison,
    MonomialOrder,
    OrderKind,
    compare,
    leading_monomial,
    leading_term,
    polynomial_key,
)
from primegb.parser import parse_polynomial
from primegb.polynomial import Polynomial, Term, mul_term
from tests.random_polys import random_monomial, random_nonzero_polynomial

ORDERS = (PRIME, LEX, GRLEX)
CTX = VarContext(num_vars=3)


def p(text: str) -> Polynomial:
    return parse_polynomial(text, CTX)


def m(*exponents: int) -> Monomial:
    return Monomial(exponents=exponents)


class TestCompare(TestCase):
    def test_examples(self):
        self.assertEqual(compare(m(1, 0, 1), m(0, 1, 1), PRIME), Comparison.Less)
        self.assertEqual(compare(m(1, 2, 0), m(1, 2, 0), PRIME), Comparison.Equal)
        self.assertEqual(compare(m(0, 0, 1), m(5, 0, 0), LEX), Comparison.Less)
        self.assertEqual(compare(m(0, 0, 1), m(5, 0, 0), PRIME), Comparison.Less)
        self.assertEqual(compare(m(0, 0, 2), m(1, 0, 0), GRLEX), Comparison.Greater)
        self.assertEqual(compare(m(1, 0, 1), m(0, 2, 0), GRLEX), Comparison.Greater)

    def test_from_name(self):
        self.assertEqual(MonomialOrder.from_name("grlex"), GRLEX)
        self.assertEqual(MonomialOrder("lex").kind, OrderKind.Lex)
        self.assertEqual(PRIME.name, "prime")
        with self.assertRaises(ValueError):
            MonomialOrder.from_name("grevlex")

    def test_axioms_exhaustive(self):
        for n in (1, 2, 3):
            monomials = [m(*e) for e in product(range(4), repeat=n)]
            one = Monomial.one(n)
            for order in ORDERS:
                table = [
                    [order.compare(a, b).value for b in monomials] for a in monomials
                ]
                indices = range(len(monomials))
                for i, j in product(indices, repeat=2):
                    self.assertEqual(table[i][j] == 0, i == j)
                    self.assertEqual(table[j][i], -table[i][j])
                for i, j, k in product(indices, repeat=3):
                    if table[i][j] < 0 and table[j][k] < 0:
                        self.assertLess(table[i][k], 0)
                for a in monomials:
                    if a != one:
                        self.assertIs(order.compare(one, a), Comparison.Less)

    def test_multiplicative_exhaustive(self):
        for n in (1, 2, 3):
            monomials = [m(*e) for e in product(range(4), repeat=n)]
            multipliers = [m(*e) for e in product(range(2), repeat=n)]
            for order in ORDERS:
                for a, b, c in product(monomials, monomials, multipliers):
                    self.assertIs(order.compare(a * c, b * c), order.compare(a, b))

    def test_prime_matches_encoding(self):
        monomials = [m(*e) for e in product(range(4), repeat=3)]
        for a, b in product(monomials, repeat=2):
            self.assertEqual(
                PRIME.compare(a, b).value,
                (a.encoding > b.encoding) - (a.encoding < b.encoding),
            )


class TestLeadingTerm(TestCase):
    def test_examples(self):
        f = p("2*x0*x2 + 4*x1*x2 - 6")
        self.assertEqual(leading_term(f, PRIME), Term(coeff=4, mono=m(0, 1, 1)))
        self.assertEqual(leading_monomial(f, PRIME), m(0, 1, 1))
        self.assertEqual(leading_term(f, LEX), Term(coeff=2, mono=m(1, 0, 1)))
        for order in ORDERS:
            self.assertEqual(leading_monomial(p("x2^2 - x2"), order), m(0, 0, 2))
            seven = Term(coeff=7, mono=m(0, 0, 0))
            self.assertEqual(leading_term(p("7"), order), seven)
            self.assertEqual(leading_monomial(p("x0"), order), m(1, 0, 0))
            with self.assertRaises(ZeroPolynomial):
                leading_term(Polynomial.zero(CTX), order)

    def test_multiplicative(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            f = random_nonzero_polynomial(rng, CTX)
            t = Term(coeff=Fraction(-2, 3), mono=random_monomial(rng, 3, 3))
            for order in ORDERS:
                self.assertEqual(
                    leading_term(mul_term(f, t), order), leading_term(f, order) * t
                )

    def test_sorted_terms(self):
        f = p("x0^3 + x1^2 + x2")
        self.assertEqual(
            [str(t) for t in PRIME.sorted_terms(f)], ["x1^2", "x0^3", "x2"]
        )
        self.assertEqual([str(t) for t in LEX.sorted_terms(f)], ["x0^3", "x1^2", "x2"])
        self.assertEqual(
            [str(t) for t in GRLEX.sorted_terms(p("x2^2 + x0 + x1^3"))],
            ["x1^3", "x2^2", "x0"],
        )

    def test_polynomial_key(self):
        self.assertLess(
            polynomial_key(p("x1 - x0"), PRIME), polynomial_key(p("x2 - x0"), PRIME)
        )
        self.assertLess(
            polynomial_key(p("x2 - x0"), PRIME), polynomial_key(p("x2 - x1"), PRIME)
        )
        self.assertEqual(
            polynomial_key(p("3*x0 - 1"), PRIME), ((2, Fraction(3)), (1, Fraction(-1)))
        )
