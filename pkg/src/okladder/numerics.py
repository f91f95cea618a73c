"""Floating-point cross-checks of the exact constructions.

Precision-controlled evaluation of exact expressions, a Dirichlet
finite-difference eigensolver for H = -d''/dx'' + V on a symmetric grid,
and composite Gauss-Legendre inner products of modes.  All tolerances are
centralized in NumericConfig.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import GridTooCoarse, PoleAtPoint
from .exact_ring import ExactPoly, QuasiGaussian, RationalFn
from .spectral import ModeFunction, energy, potential


@dataclass(frozen=True)
class NumericGrid:
    """Symmetric grid on [-half_width, half_width] with an odd point count."""

    half_width: float = 25.0
    points: int = 8001

    def __post_init__(self) -> None:
        if self.half_width <= 0:
            raise ValueError("half_width must be positive")
        if self.points < 3 or self.points % 2 == 0:
            raise ValueError("points must be an odd integer >= 3")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.points - 1)

    def nodes(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.points)

    def refined(self) -> "NumericGrid":
        return NumericGrid(self.half_width, 2 * self.points - 1)


@dataclass(frozen=True)
class NumericConfig:
    """Default grid and tolerances for every floating-point check."""

    grid: NumericGrid = NumericGrid()
    quad_panel_width: float = 0.5
    quad_order: int = 10
    eigenvalue_tol: float = 1e-6
    orthogonality_tol: float = 1e-8
    coarse_shift_tol: float = 1e-3


DEFAULT_CONFIG = NumericConfig()


def eval_float(expr, x: float, precision_bits: int = 53) -> float:
    """Evaluate an exact expression at x with the requested working precision.

    Exact coefficients are carried into an mpmath context of
    precision_bits + guard bits, so the returned double is correctly
    rounded for every practical purpose.
    """
    with mpmath.workprec(precision_bits + 16):
        return float(_eval_mp(expr, mpmath.mpf(x)))


def _eval_mp(expr, x):
    sqrt2 = mpmath.sqrt(2)

    def poly_mp(p: ExactPoly):
        acc = mpmath.mpf(0)
        for c in reversed(p.coeffs):
            term = mpmath.mpf(c.a.numerator) / c.a.denominator
            if c.b:
                term += (mpmath.mpf(c.b.numerator) / c.b.denominator) * sqrt2
            acc = acc * x + term
        return acc

    if isinstance(expr, ExactPoly):
        return poly_mp(expr)
    if isinstance(expr, RationalFn):
        den = poly_mp(expr.den)
        if den == 0:
            raise PoleAtPoint(f"pole at x = {x}")
        return poly_mp(expr.num) / den
    if isinstance(expr, QuasiGaussian):
        base = _eval_mp(expr.rational, x)
        if expr.gauss_exponent:
            base *= mpmath.exp(expr.gauss_exponent * x * x / 6)
        return base
    raise TypeError(f"cannot evaluate {type(expr).__name__}")


def _poly_array(p: ExactPoly) -> np.ndarray:
    return np.array([float(c) for c in p.coeffs], dtype=float) if not p.is_zero else np.zeros(1)


def eval_array(expr, xs: np.ndarray) -> np.ndarray:
    """Vectorized double-precision evaluation on a grid."""
    if isinstance(expr, ExactPoly):
        return np.polynomial.polynomial.polyval(xs, _poly_array(expr))
    if isinstance(expr, RationalFn):
        num = np.polynomial.polynomial.polyval(xs, _poly_array(expr.num))
        den = np.polynomial.polynomial.polyval(xs, _poly_array(expr.den))
        return num / den
    if isinstance(expr, QuasiGaussian):
        vals = eval_array(expr.rational, xs)
        if expr.gauss_exponent:
            vals = vals * np.exp(expr.gauss_exponent * xs * xs / 6.0)
        return vals
    raise TypeError(f"cannot evaluate {type(expr).__name__}")


def _dirichlet_eigenvalues(v_fn: RationalFn, grid: NumericGrid, count: int) -> np.ndarray:
    xs = grid.nodes()[1:-1]
    h = grid.spacing
    diag = 2.0 / h**2 + eval_array(v_fn, xs)
    off = np.full(xs.size - 1, -1.0 / h**2)
    return eigh_tridiagonal(
        diag, off, select="i", select_range=(0, count - 1), eigvals_only=True
    )


def fd_eigensolve(
    k: int,
    grid: NumericGrid | None = None,
    count: int = 9,
    coarse_shift_tol: float | None = None,
) -> list[float]:
    """Lowest eigenvalues of the central-difference discretization of the
    level-k Hamiltonian, Richardson-extrapolated over one grid halving.

    Raises GridTooCoarse when halving the spacing moves any eigenvalue by
    more than coarse_shift_tol, i.e. the h^2 error model is not yet valid.
    """
    grid = grid or DEFAULT_CONFIG.grid
    tol = DEFAULT_CONFIG.coarse_shift_tol if coarse_shift_tol is None else coarse_shift_tol
    v_fn = potential(k).potential_fn()
    coarse = _dirichlet_eigenvalues(v_fn, grid, count)
    fine = _dirichlet_eigenvalues(v_fn, grid.refined(), count)
    if np.max(np.abs(fine - coarse)) > tol:
        raise GridTooCoarse(
            f"halving the grid moved an eigenvalue by {np.max(np.abs(fine - coarse)):.3e}"
        )
    return list((4.0 * fine - coarse) / 3.0)


def spectrum_exact(k: int, count: int) -> list[Fraction]:
    """Sorted union of the three energy progressions."""
    levels: list[Fraction] = []
    for j in (1, 2, 3):
        levels.extend(energy(k, j, n) for n in range(count))
    return sorted(levels)[:count]


def _gauss_panels(grid: NumericGrid, panel_width: float, order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    edges = np.arange(-grid.half_width, grid.half_width - 1e-12, panel_width)
    mids = edges + panel_width / 2.0
    half = panel_width / 2.0
    xs = (mids[:, None] + half * nodes[None, :]).ravel()
    ws = np.broadcast_to(half * weights[None, :], (mids.size, order)).ravel()
    return xs, ws


def quadrature_inner(
    a: ModeFunction,
    b: ModeFunction,
    grid: NumericGrid | None = None,
    config: NumericConfig | None = None,
) -> float:
    """Integral of a*b over the grid window by composite Gauss-Legendre
    panels; the modes are real so no conjugation is involved."""
    if a.k != b.k:
        raise ValueError("inner products are defined for modes of one Hamiltonian")
    config = config or DEFAULT_CONFIG
    grid = grid or config.grid
    xs, ws = _gauss_panels(grid, config.quad_panel_width, config.quad_order)
    return float(np.sum(ws * eval_array(a.phi(), xs) * eval_array(b.phi(), xs)))


def normalized_cross_inner(
    a: ModeFunction, b: ModeFunction, grid: NumericGrid | None = None
) -> float:
    """|<a,b>| / sqrt(<a,a><b,b>)."""
    cross = quadrature_inner(a, b, grid)
    na = quadrature_inner(a, a, grid)
    nb = quadrature_inner(b, b, grid)
    return abs(cross) / float(np.sqrt(na * nb))
