import os
import random
import sys
import unittest

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra.exceptions import ArityMismatchError, InexactDivisionError, ZeroPolynomialError
from algebra.laurent import (
    T_VARIABLES,
    LaurentPoly,
    TropicalMonomial,
    normalize_unit,
    t_poly,
    y_variables,
)

XY = ("x1", "x2")


class TestLaurentArithmetic(unittest.TestCase):
    """Ring operations on sparse Laurent polynomials"""

    def test_parse_and_text(self):
        """Canonical text lists terms in lexicographic exponent order"""
        p = LaurentPoly.parse("1 - 3*t^-1", T_VARIABLES)
        self.assertEqual(p.to_text(), "-3*t^-1 + 1")
        q = LaurentPoly.parse("y1y4 + 1", y_variables(4))
        self.assertEqual(q.to_text(), "1 + y1*y4")

    def test_zero_terms_are_dropped(self):
        """Cancelling terms leave no zero coefficients behind"""
        p = LaurentPoly.parse("x1 + x2", XY)
        self.assertTrue((p - p).is_zero())
        self.assertEqual((p - LaurentPoly.variable(XY, "x2")).terms, {(1, 0): 1})

    def test_multiplication(self):
        """(x1 + 1)(x1 - 1) = x1^2 - 1"""
        a = LaurentPoly.parse("x1 + 1", XY)
        b = LaurentPoly.parse("x1 - 1", XY)
        self.assertEqual(a * b, LaurentPoly.parse("x1^2 - 1", XY))

    def test_negative_power_of_monomial(self):
        """Unit monomials invert; other polynomials do not"""
        m = LaurentPoly.monomial(XY, (1, -2), -1)
        self.assertEqual(m ** -1, LaurentPoly.monomial(XY, (-1, 2), -1))
        with self.assertRaises(InexactDivisionError):
            LaurentPoly.parse("x1 + 1", XY) ** -1
        with self.assertRaises(InexactDivisionError):
            LaurentPoly.monomial(XY, (1, 0), 2) ** -1

    def test_arity_mismatch(self):
        """Polynomials over different variable sets do not mix"""
        with self.assertRaises(ArityMismatchError):
            LaurentPoly.parse("x1", XY) + LaurentPoly.parse("t", T_VARIABLES)

    def test_equality_with_int(self):
        """A constant polynomial equals its integer"""
        self.assertEqual(LaurentPoly.constant(XY, 3), 3)
        self.assertNotEqual(LaurentPoly.parse("x1", XY), 1)


class TestExactDivision(unittest.TestCase):
    """Exact division in the Laurent ring"""

    def test_polynomial_quotient(self):
        """(x1^2 - 1) / (x1 - 1) = x1 + 1"""
        p = LaurentPoly.parse("x1^2 - 1", XY)
        q = LaurentPoly.parse("x1 - 1", XY)
        self.assertEqual(p.exact_div(q).to_text(), "1 + x1")

    def test_laurent_quotient(self):
        """Negative exponents are cleared before dividing"""
        q = LaurentPoly.parse("x1 + x2", XY)
        p = (q * LaurentPoly.parse("x1^-1 + x2^-2", XY)).shift((-3, 1))
        self.assertEqual(p.exact_div(q), LaurentPoly.parse("x1^-1 + x2^-2", XY).shift((-3, 1)))

    def test_monomial_divisor(self):
        """Division by a monomial shifts exponents"""
        p = LaurentPoly.parse("x1*x2 + x2^2", XY)
        self.assertEqual(p.exact_div(LaurentPoly.parse("x2", XY)), LaurentPoly.parse("x1 + x2", XY))

    def test_inexact(self):
        """A remainder raises"""
        with self.assertRaises(InexactDivisionError):
            LaurentPoly.parse("x1 + 2", XY).exact_div(LaurentPoly.parse("x1 + 1", XY))
        with self.assertRaises(InexactDivisionError):
            LaurentPoly.parse("x1 + 3", XY).exact_div(LaurentPoly.constant(XY, 2))

    def test_zero_divisor(self):
        """Division by zero raises"""
        with self.assertRaises(ZeroPolynomialError):
            LaurentPoly.parse("x1", XY).exact_div(LaurentPoly.zero(XY))


class TestEvaluation(unittest.TestCase):
    """Substitution, evaluation and tropical evaluation"""

    def test_substitute(self):
        """y1 -> -t, y2 -> -1/t"""
        F = LaurentPoly.parse("1 + y1 + y1*y2", y_variables(2))
        image = F.substitute(
            {
                "y1": LaurentPoly.monomial(T_VARIABLES, (1,), -1),
                "y2": LaurentPoly.monomial(T_VARIABLES, (-1,), -1),
            },
            T_VARIABLES,
        )
        self.assertEqual(image, LaurentPoly.parse("2 - t", T_VARIABLES))

    def test_evaluate(self):
        """Every variable at -1"""
        F = LaurentPoly.parse("1 + y1 + y1*y4 + y1*y6 + y1*y4*y6", y_variables(6))
        self.assertEqual(F.evaluate({name: -1 for name in F.variables}), 1)

    def test_tropical_eval(self):
        """Componentwise minimum of exponents"""
        p = LaurentPoly.parse("x1^2*x2^-1 + x2^3", XY)
        self.assertEqual(p.tropical_eval(), TropicalMonomial((0, -1)))


class TestTropicalMonomial(unittest.TestCase):
    """Tropical semifield of exponent vectors"""

    def test_operations(self):
        """Multiplication adds, oplus takes minima"""
        a = TropicalMonomial((1, -2))
        b = TropicalMonomial((0, 3))
        self.assertEqual((a * b).exponents, (1, 1))
        self.assertEqual(a.oplus(b).exponents, (0, -2))
        self.assertEqual((a / b).exponents, (1, -5))
        self.assertEqual((a ** 2).exponents, (2, -4))
        self.assertEqual(a.inverse().exponents, (-1, 2))
        self.assertEqual(a.positive_part().exponents, (1, 0))

    def test_sign(self):
        """Sign tests used for greenness"""
        self.assertTrue(TropicalMonomial.unit_vector(3, 1).is_nonnegative())
        self.assertTrue(TropicalMonomial((0, -1, 0)).is_nonpositive())
        self.assertFalse(TropicalMonomial((1, -1)).is_nonnegative())
        self.assertFalse(TropicalMonomial((1, -1)).is_nonpositive())


class TestNormalizeUnit(unittest.TestCase):
    """Normalization up to a signed power of t"""

    def test_shift_and_sign(self):
        """-t^2 + 3t - 1 and 1 - 3t + t^2 normalize alike"""
        a = t_poly([-1, 3, -1], low_degree=0)
        b = t_poly([1, -3, 1], low_degree=-1)
        self.assertEqual(normalize_unit(a), normalize_unit(b))
        self.assertEqual(normalize_unit(a), t_poly([1, -3, 1]))

    def test_idempotent(self):
        """Normalizing twice changes nothing"""
        p = t_poly([-2, 0, 5], low_degree=-4)
        self.assertEqual(normalize_unit(normalize_unit(p)), normalize_unit(p))

    def test_zero(self):
        """The zero polynomial has no normal form"""
        with self.assertRaises(ZeroPolynomialError):
            normalize_unit(LaurentPoly.zero(T_VARIABLES))


XYZ = ("x1", "x2", "x3")


def random_poly(rng: random.Random, positive: bool = False) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(1, 5)):
        exponent = tuple(rng.randint(-2, 2) for _ in XYZ)
        coeff = rng.randint(1, 3) if positive else rng.choice([-3, -2, -1, 1, 2, 3])
        terms[exponent] = coeff
    return LaurentPoly(XYZ, terms)


class TestRingAxioms(unittest.TestCase):
    """Seeded random polynomials obey the ring laws"""

    def setUp(self):
        self.rng = random.Random(20240611)

    def test_commutative_ring(self):
        """Addition and multiplication commute, associate and distribute"""
        for _ in range(40):
            p, q, r = (random_poly(self.rng) for _ in range(3))
            self.assertEqual(p + q, q + p)
            self.assertEqual(p * q, q * p)
            self.assertEqual((p * q) * r, p * (q * r))
            self.assertEqual(p * (q + r), p * q + p * r)
            self.assertTrue((p - p).is_zero())
            self.assertEqual(p * 1, p)

    def test_exact_division_of_products(self):
        """exact_div(p * q, q) recovers p"""
        for _ in range(40):
            p, q = random_poly(self.rng), random_poly(self.rng)
            self.assertEqual((p * q).exact_div(q), p)

    def test_tropical_evaluation_is_multiplicative(self):
        """Without cancellation the minimum exponents add under products and meet under sums"""
        for _ in range(40):
            p, q = random_poly(self.rng, positive=True), random_poly(self.rng, positive=True)
            self.assertEqual((p * q).tropical_eval(), p.tropical_eval() * q.tropical_eval())
            self.assertEqual((p + q).tropical_eval(), p.tropical_eval().oplus(q.tropical_eval()))


if __name__ == "__main__":
    unittest.main()
