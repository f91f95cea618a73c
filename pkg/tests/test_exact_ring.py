"""Field, polynomial, rational-function and quasi-Gaussian arithmetic."""

import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from okladder.errors import EmptyList, MixedKinds, NonZeroRemainder, ZeroDenominator
from okladder.exact_ring import (
    SQRT2,
    ExactPoly,
    QuasiGaussian,
    RationalFn,
    SqrtTwoScalar,
    apply_first_order,
    poly_gcd,
    poly_mul_div,
    wronskian,
)

fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
scalars = st.builds(SqrtTwoScalar, fractions, fractions)


def small_polys(max_degree=6):
    return st.lists(scalars, min_size=0, max_size=max_degree + 1).map(ExactPoly)


class TestScalar:
    def test_norm_identity(self):
        s = SqrtTwoScalar(Fraction(3, 7), Fraction(-2, 5))
        assert s * s.conjugate() == SqrtTwoScalar(s.norm(), 0)

    @given(scalars, scalars)
    def test_product_norm_multiplicative(self, a, b):
        assert (a * b).norm() == a.norm() * b.norm()

    @given(scalars)
    def test_inverse(self, a):
        if a.is_zero:
            with pytest.raises(ZeroDivisionError):
                a.inverse()
        else:
            assert a * a.inverse() == SqrtTwoScalar(1, 0)

    def test_sqrt2_squares_to_two(self):
        assert SQRT2 * SQRT2 == SqrtTwoScalar(2, 0)

    def test_hash_consistent_with_cross_type_equality(self):
        assert hash(SqrtTwoScalar(3, 0)) == hash(3) == hash(Fraction(3))
        assert hash(ExactPoly.constant(3)) == hash(SqrtTwoScalar(3, 0))
        assert hash(ExactPoly.zero()) == hash(0)
        assert hash(RationalFn.constant(3)) == hash(ExactPoly.constant(3))
        assert len({SqrtTwoScalar(Fraction(1, 2), 0), Fraction(1, 2)}) == 1

    def test_sign_against_high_precision_floats(self):
        rng = random.Random(20240817)
        with mpmath.workdps(50):
            root2 = mpmath.sqrt(2)
            for _ in range(10**4):
                a = Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 10**6))
                b = Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 10**6))
                s = SqrtTwoScalar(a, b)
                approx = mpmath.mpf(a.numerator) / a.denominator + (
                    mpmath.mpf(b.numerator) / b.denominator
                ) * root2
                expected = 0 if approx == 0 else (1 if approx > 0 else -1)
                assert s.sign() == expected

    def test_order(self):
        assert SqrtTwoScalar(1, 0) < SQRT2 < SqrtTwoScalar(2, 0)
        # 99/70 is a convergent of sqrt2 from above
        assert SQRT2 < SqrtTwoScalar(Fraction(99, 70), 0)
        assert SqrtTwoScalar(Fraction(140, 99), 0) < SQRT2


class TestPoly:
    def test_trailing_zeros_trimmed(self):
        p = ExactPoly((1, 2, 0, 0))
        assert p.degree == 1 and p.coeffs[-1] == SqrtTwoScalar(2, 0)

    def test_self_division(self):
        p = ExactPoly((3, 0, 2))  # 2x^2 + 3
        assert poly_mul_div(p * p, p, "divide_exact") == p

    def test_sqrt2_x_squared(self):
        sx = ExactPoly((0, SQRT2))
        assert poly_mul_div(sx, sx, "multiply") == ExactPoly((0, 0, 2))

    def test_divide_exact_table_row(self):
        q3 = ExactPoly((135, 0, 90, 0, 60, 0, 8))
        assert poly_mul_div(q3, ExactPoly.one(), "divide_exact") == q3

    def test_nonzero_remainder(self):
        with pytest.raises(NonZeroRemainder):
            poly_mul_div(ExactPoly((1, 1)), ExactPoly((0, 0, 1)), "divide_exact")

    @given(small_polys(), small_polys())
    @settings(max_examples=60)
    def test_mul_then_exact_divide_roundtrip(self, r, q):
        if q.is_zero:
            return
        assert poly_mul_div(poly_mul_div(r, q, "multiply"), q, "divide_exact") == r

    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=40)
    def test_ring_axioms(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)

    def test_eval_exact(self):
        p = ExactPoly((Fraction(1, 3), SQRT2))
        v = p.eval(SQRT2)
        assert v == SqrtTwoScalar(Fraction(7, 3), 0)

    def test_derivative_vs_difference_quotient(self):
        rng = random.Random(7)
        p = ExactPoly((Fraction(1, 3), -2, 0, Fraction(5, 7), 1))
        dp = p.derivative()
        for _ in range(100):
            x0 = Fraction(rng.randint(-400, 400), rng.randint(1, 100))
            h = Fraction(1, 10**7)
            quotient = (p.eval(x0 + h) - p.eval(x0 - h)) / SqrtTwoScalar(2 * h, 0)
            assert abs(float(quotient - dp.eval(x0))) < 1e-8

    def test_gcd(self):
        a = ExactPoly((0, 1)) * ExactPoly((3, 0, 2))
        b = ExactPoly((1, 1)) * ExactPoly((3, 0, 2))
        g = poly_gcd(a, b)
        assert g == ExactPoly((Fraction(3, 2), 0, 1))  # monic

    def test_gcd_coprime(self):
        assert poly_gcd(ExactPoly((1, 1)), ExactPoly((2, 1))) == ExactPoly.one()

    def test_json_roundtrip(self):
        p = ExactPoly((SqrtTwoScalar(Fraction(1, 3), Fraction(-2, 7)), SQRT2))
        assert ExactPoly.from_json_dict(p.to_json_dict()) == p

    def test_parity(self):
        assert ExactPoly((1, 0, 3)).parity() == 0
        assert ExactPoly((0, 1, 0, 3)).parity() == 1
        assert ExactPoly((1, 1)).parity() is None


class TestRationalFn:
    def test_reduced_and_monic_denominator(self):
        x = ExactPoly.x()
        shared = ExactPoly((3, 0, 2))
        f = RationalFn(x * shared, shared * shared * 2)
        # x/(2(2x^2+3)) with the denominator normalized monic
        assert f.num == x * Fraction(1, 4)
        assert f.den == ExactPoly((Fraction(3, 2), 0, 1))

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            RationalFn(ExactPoly.one(), ExactPoly.zero())

    @given(small_polys(3), small_polys(2), small_polys(2))
    @settings(max_examples=40)
    def test_field_ops(self, a, b, c):
        if b.is_zero or c.is_zero:
            return
        f = RationalFn(a, b)
        g = RationalFn(b, c)
        assert (f + g) - g == f
        assert (f * g) / g == f if not g.is_zero else True

    def test_derivative_quotient_rule(self):
        f = RationalFn(ExactPoly((0, 1)), ExactPoly((3, 0, 2)))
        d = f.derivative()
        # (x/(2x^2+3))' = (3 - 2x^2)/(2x^2+3)^2
        expected = RationalFn(ExactPoly((3, 0, -2)), ExactPoly((3, 0, 2)) ** 2)
        assert d == expected


class TestWronskian:
    def test_two_by_two_hand_oracle(self):
        psi1 = ExactPoly((0, 2))
        psi2 = ExactPoly((-3, 0, 2))
        assert wronskian([psi1, psi2]) == ExactPoly((6, 0, 4))

    def test_single_entry(self):
        f = ExactPoly((1, 2, 3))
        assert wronskian([f]) == f

    def test_pseudo_seed_is_table_entry(self):
        # Wr(Psi_2) = 2x^2 + 3, the first nontrivial table polynomial
        from okladder.wronskian_rep import pseudo_psi_poly

        assert wronskian([pseudo_psi_poly(2)]) == ExactPoly((3, 0, 2))

    def test_alternating(self):
        a, b, c = ExactPoly((0, 2)), ExactPoly((-3, 0, 2)), ExactPoly((1, 1, 1))
        assert wronskian([a, b, c]) == -wronskian([b, a, c])

    def test_empty_and_mixed(self):
        with pytest.raises(EmptyList):
            wronskian([])
        with pytest.raises(MixedKinds):
            wronskian([ExactPoly.one(), QuasiGaussian(RationalFn.one(), 0)])

    def test_quasi_gaussian_factoring(self):
        # Wr of two entries sharing exp(-x^2/6) reports multiplier -2, and the
        # common Gaussian factors out of the determinant entirely
        entries = [
            QuasiGaussian(RationalFn.from_poly(ExactPoly((0, 2))), -1),
            QuasiGaussian(RationalFn.from_poly(ExactPoly((-3, 0, 2))), -1),
        ]
        gw = wronskian(entries)
        assert gw.exponent_multiplier == -2
        assert gw.rational_part == RationalFn.from_poly(ExactPoly((6, 0, 4)))


class TestQuasiGaussian:
    def test_ground_mode_annihilation(self):
        # the lowering factor -d/dx + W with W = -x/3 kills exp(-x^2/6)
        w = RationalFn.from_poly(ExactPoly((0, Fraction(-1, 3))))
        g = QuasiGaussian(RationalFn.one(), -1)
        assert apply_first_order(-1, w, g).is_zero

    def test_plain_derivative(self):
        g = QuasiGaussian(RationalFn.from_poly(ExactPoly.x()), 0)
        out = apply_first_order(1, RationalFn.zero(), g)
        assert out == QuasiGaussian(RationalFn.one(), 0)

    def test_product_rule_against_gaussian(self):
        f = RationalFn.from_poly(ExactPoly((0, Fraction(1, 3))))
        g = QuasiGaussian(RationalFn.one(), -1)
        out = apply_first_order(-1, f, g)
        assert out == QuasiGaussian(RationalFn.from_poly(ExactPoly((0, Fraction(2, 3)))), -1)

    def test_product_exponent_rule(self):
        a = QuasiGaussian(RationalFn.one(), -1)
        b = QuasiGaussian(RationalFn.from_poly(ExactPoly.x()), 1)
        assert (a * b).gauss_exponent == 0
        with pytest.raises(ValueError):
            _ = a * a

    def test_derivative_vs_difference_quotient(self):
        from okladder.numerics import eval_float

        rng = random.Random(11)
        g = QuasiGaussian(RationalFn(ExactPoly((1, 2)), ExactPoly((3, 0, 2))), -1)
        dg = g.derivative()
        for _ in range(100):
            x0 = rng.uniform(-4, 4)
            h = 1e-6
            quotient = (eval_float(g, x0 + h) - eval_float(g, x0 - h)) / (2 * h)
            assert abs(quotient - eval_float(dg, x0)) < 1e-8
