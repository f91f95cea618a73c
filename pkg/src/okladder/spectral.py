"""Hamiltonians with third-order shape invariance over the "-2x/3" hierarchy.

Potential, superpotentials, factorization energies, the three zero-modes,
exact third-order ladder operators, and the three-sequence spectrum.  The
energy unit is fixed by lambda = 1 (spectral shift 2 per ladder step).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfCone
from .exact_ring import (
    ExactPoly,
    QuasiGaussian,
    RationalFn,
    apply_first_order,
    log_derivative,
)
from .okamoto import okamoto

_X_SQ = ExactPoly((0, 0, 1))
_X_OVER_3 = RationalFn.from_poly(ExactPoly((0, Fraction(1, 3))))


def energy(k: int, j: int, n: int) -> Fraction:
    """E_{n;j}: three disjoint arithmetic progressions of step 2."""
    if j == 1:
        return Fraction(2 * n)
    if j == 2:
        return 2 * k + 2 * n + Fraction(2, 3)
    if j == 3:
        return 2 * k + 2 * n + Fraction(4, 3)
    raise ValueError(f"sequence index j must be 1, 2 or 3, got {j}")


def mode_degree(k: int, j: int, n: int) -> int:
    """Degree of the polynomial part of the (n, j) mode."""
    if j == 1:
        return k * k - k + 3 * n
    if j == 2:
        return (k + 1) * (k + 1) + 3 * n
    if j == 3:
        return k * k + 2 * k + 2 + 3 * n
    raise ValueError(f"sequence index j must be 1, 2 or 3, got {j}")


@dataclass(frozen=True)
class HamiltonianK:
    """H = -d^2/dx^2 + V with V = x^2 + potential_rational + potential_shift.

    potential_rational is the improper rational term -(4/9) Q_{k+2} Q_k / Q_{k+1}^2
    (it grows like -(8/9) x^2, bringing the full potential down to x^2/9 + const);
    weight is the common eigenfunction factor exp(-x^2/6)/Q_{k+1}.
    """

    k: int
    potential_rational: RationalFn
    potential_shift: Fraction
    weight: QuasiGaussian

    def potential_fn(self) -> RationalFn:
        return (
            RationalFn.from_poly(_X_SQ)
            + self.potential_rational
            + RationalFn.constant(self.potential_shift)
        )

    def apply(self, g: QuasiGaussian) -> QuasiGaussian:
        """H g = -g'' + V g, exactly."""
        return QuasiGaussian(
            -g.derivative().derivative().rational + self.potential_fn() * g.rational,
            g.gauss_exponent,
        )

    def asymptotic_constant(self) -> Fraction:
        """Limit of V(x) - x^2/9 for |x| -> oo (finite by construction)."""
        quot, _ = divmod(self.potential_rational.num, self.potential_rational.den)
        # quot = -(8/9) x^2 + c with c rational
        assert quot.degree == 2 and quot.coeff(2) == Fraction(-8, 9) and quot.coeff(1).is_zero
        c = quot.coeff(0)
        assert c.is_rational
        return self.potential_shift + c.a


@dataclass(frozen=True)
class ModeFunction:
    """Eigenfunction data phi_{n;j} = weight * P up to normalization."""

    k: int
    j: int
    n: int
    P: ExactPoly
    energy: Fraction

    def phi(self) -> QuasiGaussian:
        return QuasiGaussian(RationalFn(self.P, okamoto(self.k + 1, 0)), -1)


@dataclass(frozen=True)
class LadderOp:
    """Ordered composition of first-order factors (sign * d/dx + f).

    factors are stored in composition order (leftmost first); application
    on a function runs right-to-left.
    """

    factors: tuple[tuple[int, RationalFn], ...]

    def apply(self, g: QuasiGaussian) -> QuasiGaussian:
        for sign, f in reversed(self.factors):
            g = apply_first_order(sign, f, g)
        return g

    def adjoint(self) -> "LadderOp":
        return LadderOp(tuple((-sign, f) for sign, f in reversed(self.factors)))


def potential(k: int) -> HamiltonianK:
    """V(x) = x^2 - (4/9) Q_{k+2} Q_k / Q_{k+1}^2 + 4k + 1."""
    if k < 0:
        raise IndexOutOfCone("potential index k must be >= 0")
    rational = RationalFn(
        okamoto(k + 2, 0) * okamoto(k, 0) * Fraction(-4, 9),
        okamoto(k + 1, 0) ** 2,
    )
    weight = QuasiGaussian(RationalFn(ExactPoly.one(), okamoto(k + 1, 0)), -1)
    return HamiltonianK(
        k=k,
        potential_rational=rational,
        potential_shift=Fraction(4 * k + 1),
        weight=weight,
    )


def superpotentials(k: int, branch: str = "+") -> tuple[RationalFn, RationalFn, RationalFn]:
    """(W, W1, W2) for the three-step factorization.

    W  = -(x/3 + (ln Q_{k+1}/Q_k)')
    W1 = x/3 + (ln B/Q_{k+1})',   W2 = x/3 + (ln Q_k/B)'
    with B = Q_{k,1} on the '+' branch and B = Q_{k+1,-1} on the '-' branch;
    the '-' branch swaps the roles of the j = 2 and j = 3 zero-modes.
    """
    if branch not in ("+", "-"):
        raise ValueError("branch must be '+' or '-'")
    q_k = okamoto(k, 0)
    q_k1 = okamoto(k + 1, 0)
    b = okamoto(k, 1) if branch == "+" else okamoto(k + 1, -1)
    w = -(_X_OVER_3 + log_derivative(q_k1) - log_derivative(q_k))
    w1 = _X_OVER_3 + log_derivative(b) - log_derivative(q_k1)
    w2 = _X_OVER_3 + log_derivative(q_k) - log_derivative(b)
    return w, w1, w2


def factorization_energies(k: int) -> tuple[Fraction, Fraction]:
    """(eps1, eps2) = (2k - 4/3, 2k - 2/3); their gap 2/3 is twice sqrt(1/9)."""
    return 2 * k - Fraction(4, 3), 2 * k - Fraction(2, 3)


def zero_mode(k: int, j: int, branch: str = "+") -> ModeFunction:
    """The three states annihilated by the lowering operator.

    Polynomial parts Q_k, Q_{k+1,1}, Q_{k+2,-1} at energies 0, 2k+2/3,
    2k+4/3 on the '+' branch; the '-' branch swaps j = 2 and j = 3.
    """
    if j not in (1, 2, 3):
        raise ValueError(f"sequence index j must be 1, 2 or 3, got {j}")
    jj = j
    if branch == "-" and j in (2, 3):
        jj = 5 - j
    if jj == 1:
        p = okamoto(k, 0)
    elif jj == 2:
        p = okamoto(k + 1, 1)
    else:
        p = okamoto(k + 2, -1)
    return ModeFunction(k=k, j=j, n=0, P=p, energy=energy(k, jj, 0))


def ladder(k: int, direction: str) -> LadderOp:
    """Third-order ladder operators in factored form.

    raise:  (+d/dx + W) o (-d/dx + W2) o (-d/dx + W1)
    lower:  (+d/dx + W1) o (+d/dx + W2) o (-d/dx + W)
    """
    w, w1, w2 = superpotentials(k)
    if direction == "raise":
        return LadderOp(((1, w), (-1, w2), (-1, w1)))
    if direction == "lower":
        return LadderOp(((1, w1), (1, w2), (-1, w)))
    raise ValueError("direction must be 'raise' or 'lower'")


def ladder_constant_sq(k: int, j: int, n: int) -> Fraction:
    """Squared proportionality constant C^2_{n+1;j} of the raising step,
    equal to (E - eps1)(E - eps2)(E + 2) at E = E_{n;j}."""
    if n < 0:
        raise ValueError("level index n must be >= 0")
    np1 = Fraction(n + 1)
    if j == 1:
        return 8 * np1 * (n - k + Fraction(2, 3)) * (n - k + Fraction(1, 3))
    if j == 2:
        return 8 * np1 * (n + Fraction(2, 3)) * (n + k + Fraction(4, 3))
    if j == 3:
        return 8 * np1 * (n + Fraction(4, 3)) * (n + k + Fraction(5, 3))
    raise ValueError(f"sequence index j must be 1, 2 or 3, got {j}")


def hamiltonian_residual(mode: ModeFunction) -> QuasiGaussian:
    """(-d^2/dx^2 + V - E) applied to weight * P; zero certifies the mode."""
    ham = potential(mode.k)
    phi = mode.phi()
    out = ham.apply(phi)
    return out - QuasiGaussian(phi.rational * RationalFn.constant(mode.energy), -1)


def intertwining_checks(k: int, test_fn: QuasiGaussian | None = None) -> list[bool]:
    """Exact intertwining relations of the factor chain, applied to a test
    function:

        H M1! = M1! H2     H2 M1 = M1 H
        H1 M2 = M2 H2      H2 M2! = M2! H1
        H Q!  = Q! (H1 + 2)    H1 Q = Q (H - 2)

    with the auxiliary potentials built from the superpotentials.
    """
    w, w1, w2 = superpotentials(k)
    e1, e2 = factorization_energies(k)
    v2 = w1 * w1 - w1.derivative() + RationalFn.constant(e2)
    v1 = w2 * w2 - w2.derivative() + RationalFn.constant(e1)

    def second_order(v: RationalFn):
        def apply(g: QuasiGaussian) -> QuasiGaussian:
            return QuasiGaussian(
                -g.derivative().derivative().rational + v * g.rational, g.gauss_exponent
            )

        return apply

    ham = second_order(potential(k).potential_fn())
    ham1 = second_order(v1)
    ham2 = second_order(v2)
    g = test_fn or QuasiGaussian(RationalFn(okamoto(k, 1), okamoto(k + 1, 0)), -1)
    m1_up = lambda f: apply_first_order(1, w1, f)
    m1_dn = lambda f: apply_first_order(-1, w1, f)
    m2_up = lambda f: apply_first_order(1, w2, f)
    m2_dn = lambda f: apply_first_order(-1, w2, f)
    q_up = lambda f: apply_first_order(1, w, f)
    q_dn = lambda f: apply_first_order(-1, w, f)
    return [
        (ham(m1_up(g)) - m1_up(ham2(g))).is_zero,
        (ham2(m1_dn(g)) - m1_dn(ham(g))).is_zero,
        (ham1(m2_dn(g)) - m2_dn(ham2(g))).is_zero,
        (ham2(m2_up(g)) - m2_up(ham1(g))).is_zero,
        (ham(q_up(g)) - (q_up(ham1(g)) + q_up(g) * 2)).is_zero,
        (ham1(q_dn(g)) - (q_dn(ham(g)) - q_dn(g) * 2)).is_zero,
    ]


def auxiliary_potential_checks(k: int, branch: str = "+") -> list[bool]:
    """Exact factorization identities tying H and the two auxiliary
    Hamiltonians of the chain to the superpotentials:

        V   = W^2 + W'                      (ground factorization)
        V   = W1^2 + W1' + eps_a            (H  = M1! M1 + eps_a)
        V2  = W1^2 - W1' + eps_a
            = W2^2 + W2' + eps_b            (H2 = M2! M2 + eps_b)
        V1  = W2^2 - W2' + eps_b = W^2 - W' - 2

    On the '+' branch (eps_a, eps_b) = (eps2, eps1); the '-' branch swaps
    them, so both factorization energies appear on either branch.
    """
    w, w1, w2 = superpotentials(k, branch)
    e1, e2 = factorization_energies(k)
    ea, eb = (e2, e1) if branch == "+" else (e1, e2)
    v = potential(k).potential_fn()
    v2_a = w1 * w1 - w1.derivative() + RationalFn.constant(ea)
    v2_b = w2 * w2 + w2.derivative() + RationalFn.constant(eb)
    v1_a = w2 * w2 - w2.derivative() + RationalFn.constant(eb)
    v1_b = w * w - w.derivative() - RationalFn.constant(2)
    return [
        v == w * w + w.derivative(),
        v == w1 * w1 + w1.derivative() + RationalFn.constant(ea),
        v2_a == v2_b,
        v1_a == v1_b,
    ]
