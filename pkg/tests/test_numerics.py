"""Floating-point cross-checks: evaluation, eigenvalues, inner products."""

import math

import pytest

from okladder.errors import GridTooCoarse, PoleAtPoint
from okladder.exact_ring import ExactPoly, RationalFn
from okladder.numerics import (
    NumericGrid,
    eval_array,
    eval_float,
    fd_eigensolve,
    normalized_cross_inner,
    quadrature_inner,
    spectrum_exact,
)
from okladder.spectral import ModeFunction, energy, potential, zero_mode
from okladder.ttrr import ttrr_sequence


class TestGrid:
    def test_spacing(self):
        g = NumericGrid(25.0, 8001)
        assert g.spacing == pytest.approx(50.0 / 8000)

    def test_validation(self):
        with pytest.raises(ValueError):
            NumericGrid(25.0, 8000)  # even
        with pytest.raises(ValueError):
            NumericGrid(-1.0, 8001)

    def test_refined_shares_nodes(self):
        g = NumericGrid(10.0, 11)
        assert g.refined().points == 21
        assert g.refined().spacing == pytest.approx(g.spacing / 2)


class TestEvalFloat:
    def test_potential_at_zero(self):
        assert eval_float(potential(1).potential_fn(), 0.0) == pytest.approx(-5 / 3, abs=1e-15)

    def test_potential_at_one(self):
        assert eval_float(potential(1).potential_fn(), 1.0) == pytest.approx(178 / 225, abs=1e-15)

    def test_weight_at_origin(self):
        assert eval_float(zero_mode(0, 1).phi(), 0.0) == 1.0

    def test_high_precision_request(self):
        v = eval_float(potential(2).potential_fn(), 0.5, precision_bits=200)
        assert v == pytest.approx(eval_float(potential(2).potential_fn(), 0.5), rel=1e-15)

    def test_pole_guard(self):
        f = RationalFn(ExactPoly.one(), ExactPoly((-1, 1)))  # 1/(x-1)
        with pytest.raises(PoleAtPoint):
            eval_float(f, 1.0)

    def test_array_agrees_with_scalar(self):
        import numpy as np

        v = potential(1).potential_fn()
        xs = np.linspace(-3, 3, 11)
        vals = eval_array(v, xs)
        for x, val in zip(xs, vals):
            assert val == pytest.approx(eval_float(v, float(x)), rel=1e-12)


class TestEigensolve:
    def test_oscillator_ladder(self):
        values = fd_eigensolve(0, count=4)
        for got, want in zip(values, [0.0, 2 / 3, 4 / 3, 2.0]):
            assert abs(got - want) < 1e-6

    def test_k1_spectrum(self):
        values = fd_eigensolve(1, count=5)
        expected = [0.0, 2.0, 8 / 3, 10 / 3, 4.0]
        assert [float(e) for e in spectrum_exact(1, 5)] == pytest.approx(expected)
        for got, want in zip(values, expected):
            assert abs(got - want) < 1e-6

    def test_k2_spectrum(self):
        values = fd_eigensolve(2, count=5)
        expected = [0.0, 2.0, 4.0, 14 / 3, 16 / 3]
        for got, want in zip(values, expected):
            assert abs(got - want) < 1e-6

    def test_grid_too_coarse_detected(self):
        with pytest.raises(GridTooCoarse):
            fd_eigensolve(1, grid=NumericGrid(25.0, 201), count=5, coarse_shift_tol=1e-9)


class TestInnerProducts:
    def test_gaussian_norm_oracle(self):
        g = zero_mode(0, 1)
        assert quadrature_inner(g, g) == pytest.approx(math.sqrt(3 * math.pi), rel=1e-12)

    def test_zero_modes_orthogonal(self):
        a, b = zero_mode(1, 2), zero_mode(1, 3)
        assert normalized_cross_inner(a, b) < 1e-8

    def test_sequence_orthogonality(self):
        seq = ttrr_sequence(1, 1, 1)
        a = ModeFunction(1, 1, 0, seq[0], energy(1, 1, 0))
        b = ModeFunction(1, 1, 1, seq[1], energy(1, 1, 1))
        assert normalized_cross_inner(a, b) < 1e-8

    def test_mixed_hamiltonians_rejected(self):
        with pytest.raises(ValueError):
            quadrature_inner(zero_mode(0, 1), zero_mode(1, 1))

    def test_norm_ratio_mirror(self):
        import numpy as np

        from okladder.numerics import DEFAULT_CONFIG, _gauss_panels
        from okladder.spectral import ladder, ladder_constant_sq

        xs, ws = _gauss_panels(DEFAULT_CONFIG.grid, 0.5, 10)
        up = ladder(1, "raise")
        seq = ttrr_sequence(1, 2, 1)
        mode = ModeFunction(1, 2, 0, seq[0], energy(1, 2, 0))
        raised = eval_array(up.apply(mode.phi()), xs)
        base = eval_array(mode.phi(), xs)
        ratio = float(np.sum(ws * raised**2) / np.sum(ws * base**2))
        assert ratio == pytest.approx(float(ladder_constant_sq(1, 2, 0)), rel=1e-6)
