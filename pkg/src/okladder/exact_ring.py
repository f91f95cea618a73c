"""Exact arithmetic over Q(sqrt2).

Scalars a + b*sqrt(2) with arbitrary-precision rational a, b; dense
polynomials over them; reduced rational functions; and quasi-Gaussian
functions R(x)*exp(s*x^2/6) closed under first-order ladder factors.
All values are immutable and every operation is a pure function.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import EmptyList, MixedKinds, NonZeroRemainder, ZeroDenominator

ScalarLike = Union["SqrtTwoScalar", Fraction, int]


class SqrtTwoScalar:
    """Element a + b*sqrt(2) of the real quadratic field Q(sqrt2).

    Sign and comparison are exact: a + b*sqrt2 is compared through the
    norm identity (a + b*sqrt2)(a - b*sqrt2) = a^2 - 2*b^2, never through
    floating point.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: Fraction | int = 0, b: Fraction | int = 0) -> None:
        object.__setattr__(self, "a", a if type(a) is Fraction else Fraction(a))
        object.__setattr__(self, "b", b if type(b) is Fraction else Fraction(b))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("SqrtTwoScalar is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def coerce(cls, value: ScalarLike) -> "SqrtTwoScalar":
        if isinstance(value, SqrtTwoScalar):
            return value
        return cls(Fraction(value), Fraction(0))

    # -- predicates --------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.a and not self.b

    @property
    def is_rational(self) -> bool:
        return not self.b

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- ring operations ---------------------------------------------------
    def __add__(self, other: ScalarLike) -> "SqrtTwoScalar":
        other = SqrtTwoScalar.coerce(other)
        return SqrtTwoScalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "SqrtTwoScalar":
        other = SqrtTwoScalar.coerce(other)
        return SqrtTwoScalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: ScalarLike) -> "SqrtTwoScalar":
        return SqrtTwoScalar.coerce(other) - self

    def __neg__(self) -> "SqrtTwoScalar":
        return SqrtTwoScalar(-self.a, -self.b)

    def __mul__(self, other: ScalarLike) -> "SqrtTwoScalar":
        other = SqrtTwoScalar.coerce(other)
        return SqrtTwoScalar(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "SqrtTwoScalar":
        return SqrtTwoScalar(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm a^2 - 2*b^2."""
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self) -> "SqrtTwoScalar":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
        return SqrtTwoScalar(self.a / n, -self.b / n)

    def __truediv__(self, other: ScalarLike) -> "SqrtTwoScalar":
        return self * SqrtTwoScalar.coerce(other).inverse()

    def __rtruediv__(self, other: ScalarLike) -> "SqrtTwoScalar":
        return SqrtTwoScalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "SqrtTwoScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = SqrtTwoScalar(1, 0)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order -------------------------------------------------------------
    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}; a^2 is compared against 2*b^2."""
        if not self.b:
            return -1 if self.a < 0 else (1 if self.a > 0 else 0)
        if not self.a:
            return 1 if self.b > 0 else -1
        sa = 1 if self.a > 0 else -1
        sb = 1 if self.b > 0 else -1
        if sa == sb:
            return sa
        # Opposite-signed parts: the larger of a^2, 2 b^2 decides.
        return sa if self.a * self.a > 2 * self.b * self.b else sb

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, SqrtTwoScalar):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        # rational elements hash like their Fraction so == stays consistent
        return hash(self.a) if not self.b else hash((self.a, self.b))

    def __lt__(self, other: ScalarLike) -> bool:
        return (self - SqrtTwoScalar.coerce(other)).sign() < 0

    def __le__(self, other: ScalarLike) -> bool:
        return (self - SqrtTwoScalar.coerce(other)).sign() <= 0

    def __gt__(self, other: ScalarLike) -> bool:
        return (self - SqrtTwoScalar.coerce(other)).sign() > 0

    def __ge__(self, other: ScalarLike) -> bool:
        return (self - SqrtTwoScalar.coerce(other)).sign() >= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(2.0)

    def __repr__(self) -> str:
        return f"SqrtTwoScalar({self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*sqrt2"
        return f"({self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}*sqrt2)"


SQRT2 = SqrtTwoScalar(0, 1)
_ZERO = SqrtTwoScalar(0, 0)
_ONE = SqrtTwoScalar(1, 0)

# Primes p = 7 (mod 8), so 2 is a quadratic residue and sqrt2 has a mod-p
# image; used for fast coprimality certificates in the polynomial gcd.
_CERT_PRIMES: list[tuple[int, int]] = []
for _p in (2**61 - 1, 2**31 - 1):
    _s = pow(2, (_p + 1) // 4, _p)
    assert _s * _s % _p == 2
    _CERT_PRIMES.append((_p, _s))


class ExactPoly:
    """Dense polynomial over Q(sqrt2), ascending coefficients.

    The highest stored coefficient is nonzero; the zero polynomial stores
    an empty coefficient tuple and reports degree -1.
    """

    __slots__ = ("coeffs", "_ints")

    def __init__(self, coeffs: Iterable[ScalarLike] = ()) -> None:
        cs = [SqrtTwoScalar.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_ints", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("ExactPoly is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls) -> "ExactPoly":
        return cls(())

    @classmethod
    def one(cls) -> "ExactPoly":
        return cls((_ONE,))

    @classmethod
    def x(cls) -> "ExactPoly":
        return cls((_ZERO, _ONE))

    @classmethod
    def monomial(cls, coeff: ScalarLike, degree: int) -> "ExactPoly":
        c = SqrtTwoScalar.coerce(coeff)
        if c.is_zero:
            return cls.zero()
        return cls((_ZERO,) * degree + (c,))

    @classmethod
    def constant(cls, c: ScalarLike) -> "ExactPoly":
        return cls((SqrtTwoScalar.coerce(c),))

    # -- basic queries ------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> SqrtTwoScalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> SqrtTwoScalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def parity(self) -> int | None:
        """0 for even, 1 for odd, None for mixed; zero counts as even."""
        if self.is_zero:
            return 0
        p = self.degree % 2
        if all(c.is_zero for i, c in enumerate(self.coeffs) if i % 2 != p):
            return p
        return None

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, SqrtTwoScalar)):
            return self == ExactPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self.degree <= 0:
            return hash(self.coeffs[0]) if self.coeffs else hash(0)
        return hash(self.coeffs)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        if not isinstance(other, ExactPoly):
            other = ExactPoly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return ExactPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "ExactPoly":
        if not isinstance(other, ExactPoly):
            other = ExactPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "ExactPoly":
        return ExactPoly.constant(other) - self

    def _int_arrays(self) -> tuple[list[int], list[int], int]:
        """Return (A, B, den) with coeff_i = (A_i + B_i*sqrt2)/den, integers."""
        cached = self._ints
        if cached is not None:
            return cached
        den = 1
        for c in self.coeffs:
            den = den * c.a.denominator // math.gcd(den, c.a.denominator)
            den = den * c.b.denominator // math.gcd(den, c.b.denominator)
        A = [int(c.a * den) for c in self.coeffs]
        B = [int(c.b * den) for c in self.coeffs]
        object.__setattr__(self, "_ints", (A, B, den))
        return A, B, den

    def __mul__(self, other) -> "ExactPoly":
        if isinstance(other, (int, Fraction, SqrtTwoScalar)):
            c = SqrtTwoScalar.coerce(other)
            if c.is_zero:
                return ExactPoly.zero()
            return ExactPoly(tuple(ci * c for ci in self.coeffs))
        if not isinstance(other, ExactPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ExactPoly.zero()
        # Integer convolution: clear denominators once, convolve with plain
        # ints, reassemble Fractions at the end.
        A1, B1, d1 = self._int_arrays()
        A2, B2, d2 = other._int_arrays()
        n1, n2 = len(A1), len(A2)
        ra = [0] * (n1 + n2 - 1)
        rb = [0] * (n1 + n2 - 1)
        for i in range(n1):
            a1 = A1[i]
            b1 = B1[i]
            if a1 == 0 and b1 == 0:
                continue
            for j in range(n2):
                k = i + j
                a2 = A2[j]
                b2 = B2[j]
                ra[k] += a1 * a2 + 2 * b1 * b2
                rb[k] += a1 * b2 + b1 * a2
        den = d1 * d2
        return ExactPoly(
            tuple(SqrtTwoScalar(Fraction(a, den), Fraction(b, den)) for a, b in zip(ra, rb))
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ExactPoly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = ExactPoly.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "ExactPoly") -> tuple["ExactPoly", "ExactPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return ExactPoly.zero(), self
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        quot = [_ZERO] * (dq + 1)
        inv_lead = other.leading.inverse()
        oc = other.coeffs
        for i in range(dq, -1, -1):
            c = rem[i + len(oc) - 1]
            if c.is_zero:
                continue
            q = c * inv_lead
            quot[i] = q
            for j, ocj in enumerate(oc):
                rem[i + j] = rem[i + j] - q * ocj
        return ExactPoly(quot), ExactPoly(rem)

    def exact_div(self, other: "ExactPoly") -> "ExactPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise NonZeroRemainder(
                f"degree-{other.degree} divisor does not divide degree-{self.degree} dividend"
            )
        return q

    def derivative(self) -> "ExactPoly":
        return ExactPoly(tuple(c * i for i, c in enumerate(self.coeffs) if i))

    def eval(self, x: ScalarLike) -> SqrtTwoScalar:
        x = SqrtTwoScalar.coerce(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, x: ScalarLike) -> SqrtTwoScalar:
        return self.eval(x)

    # -- normal forms --------------------------------------------------------
    def monic(self) -> "ExactPoly":
        if self.is_zero:
            return self
        return self * self.leading.inverse()

    def lattice_primitive(self, keep_sign: bool = False) -> "ExactPoly":
        """Scale to integer (a, b) parts with content 1; the leading sign is
        normalized positive unless keep_sign (scaling by a positive rational
        only, as Sturm chains require)."""
        if self.is_zero:
            return self
        A, B, _den = self._int_arrays()
        g = 0
        for v in A:
            g = math.gcd(g, v)
        for v in B:
            g = math.gcd(g, v)
        if not keep_sign and self.leading.sign() < 0:
            g = -g
        return ExactPoly(
            tuple(SqrtTwoScalar(Fraction(a, g), Fraction(b, g)) for a, b in zip(A, B))
        )

    def proportionality(self, other: "ExactPoly") -> SqrtTwoScalar | None:
        """Scalar c with self == c*other, or None if not proportional."""
        if self.is_zero:
            return _ONE if other.is_zero else _ZERO
        if other.is_zero or self.degree != other.degree:
            return None
        c = self.leading / other.leading
        return c if self == other * c else None

    # -- serialization -------------------------------------------------------
    def to_json_dict(self) -> dict:
        return {
            "coeffs": [
                [f"{c.a.numerator}/{c.a.denominator}", f"{c.b.numerator}/{c.b.denominator}"]
                for c in self.coeffs
            ]
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExactPoly":
        return cls(
            tuple(SqrtTwoScalar(Fraction(a), Fraction(b)) for a, b in data["coeffs"])
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def __repr__(self) -> str:
        return f"ExactPoly({self.pretty()})"

    def pretty(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xs = var if i == 1 else f"{var}^{i}"
                parts.append(xs if c == _ONE else f"{c}*{xs}")
        return " + ".join(parts).replace("+ -", "- ")


def _mod_image(p: ExactPoly, prime: int, sqrt2_image: int) -> list[int] | None:
    """Coefficients of p mod prime with sqrt2 -> sqrt2_image, or None if the
    denominator or the leading coefficient vanishes mod prime."""
    A, B, den = p._int_arrays()
    if den % prime == 0:
        return None
    inv_den = pow(den, prime - 2, prime)
    out = [((a + sqrt2_image * b) % prime) * inv_den % prime for a, b in zip(A, B)]
    if out and out[-1] == 0:
        return None
    return out


def _gcd_mod_p(f: list[int], g: list[int], p: int) -> int:
    """Degree of gcd of f, g over F_p (coefficient lists, ascending)."""

    def rstrip(c: list[int]) -> list[int]:
        while c and c[-1] == 0:
            c.pop()
        return c

    a, b = rstrip(list(f)), rstrip(list(g))
    if len(a) < len(b):
        a, b = b, a
    while b:
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            if c:
                off = len(a) - len(b)
                for i, bi in enumerate(b):
                    a[off + i] = (a[off + i] - c * bi) % p
            a.pop()
            rstrip(a)
            if not a:
                break
        a, b = b, rstrip(a)
    return len(a) - 1


def _certified_coprime(p: ExactPoly, q: ExactPoly) -> bool:
    """True only with proof: a unit gcd of the mod-prime images certifies
    coprimality over Q(sqrt2)."""
    for prime, s in _CERT_PRIMES:
        fp = _mod_image(p, prime, s)
        gp = _mod_image(q, prime, s)
        if fp is None or gp is None:
            continue
        return _gcd_mod_p(fp, gp, prime) == 0
    return False


def poly_gcd(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    """Monic gcd over Q(sqrt2).

    Fast path: a modular coprimality certificate. Fallback: primitive
    remainder sequence over the integer (a, b) lattice, which avoids the
    coefficient blowup of naive fraction Euclid.
    """
    if p.is_zero:
        return q.monic() if not q.is_zero else ExactPoly.zero()
    if q.is_zero:
        return p.monic()
    if p.degree == 0 or q.degree == 0:
        return ExactPoly.one()
    if _certified_coprime(p, q):
        return ExactPoly.one()
    a, b = p.lattice_primitive(), q.lattice_primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        _, r = divmod(a, b)
        a, b = b, (r.lattice_primitive() if not r.is_zero else r)
    return a.monic()


def poly_mul_div(p: ExactPoly, q: ExactPoly, mode: str) -> ExactPoly:
    """Multiply or exactly divide two polynomials.

    mode 'divide_exact' raises NonZeroRemainder when q does not divide p,
    which flags a wrong recurrence instance upstream.
    """
    if mode == "multiply":
        return p * q
    if mode == "divide_exact":
        if q.is_zero:
            raise ZeroDivisionError("divide_exact by zero polynomial")
        return p.exact_div(q)
    raise ValueError(f"unknown mode {mode!r}")


class RationalFn:
    """Reduced quotient of two ExactPoly.

    Canonical form: numerator and denominator share no nonconstant factor
    and the denominator is monic, so equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: ExactPoly, den: ExactPoly | None = None, *, _reduced: bool = False) -> None:
        if den is None:
            den = ExactPoly.one()
        if den.is_zero:
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero:
            num, den = ExactPoly.zero(), ExactPoly.one()
        elif not _reduced:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.leading
            if lead != _ONE:
                inv = lead.inverse()
                num = num * inv
                den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("RationalFn is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def from_poly(cls, p: ExactPoly) -> "RationalFn":
        return cls(p, ExactPoly.one(), _reduced=True)

    @classmethod
    def zero(cls) -> "RationalFn":
        return cls.from_poly(ExactPoly.zero())

    @classmethod
    def one(cls) -> "RationalFn":
        return cls.from_poly(ExactPoly.one())

    @classmethod
    def constant(cls, c: ScalarLike) -> "RationalFn":
        return cls.from_poly(ExactPoly.constant(c))

    @classmethod
    def x(cls) -> "RationalFn":
        return cls.from_poly(ExactPoly.x())

    @classmethod
    def coerce(cls, value) -> "RationalFn":
        if isinstance(value, RationalFn):
            return value
        if isinstance(value, ExactPoly):
            return cls.from_poly(value)
        return cls.constant(value)

    # -- queries -------------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> ExactPoly:
        if not self.is_polynomial:
            raise NonZeroRemainder("rational function is not a polynomial")
        return self.num  # denominator is monic degree 0, i.e. exactly 1

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFn):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (ExactPoly, int, Fraction, SqrtTwoScalar)):
            return self == RationalFn.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.num) if self.is_polynomial else hash((self.num, self.den))

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other) -> "RationalFn":
        other = RationalFn.coerce(other)
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> "RationalFn":
        return self + (-RationalFn.coerce(other))

    def __rsub__(self, other) -> "RationalFn":
        return RationalFn.coerce(other) - self

    def __mul__(self, other) -> "RationalFn":
        other = RationalFn.coerce(other)
        if self.is_zero or other.is_zero:
            return RationalFn.zero()
        # Cross-reduce before multiplying to keep degrees low.
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num.exact_div(g1) if g1.degree > 0 else self.num
        d2 = other.den.exact_div(g1) if g1.degree > 0 else other.den
        n2 = other.num.exact_div(g2) if g2.degree > 0 else other.num
        d1 = self.den.exact_div(g2) if g2.degree > 0 else self.den
        num = n1 * n2
        den = d1 * d2
        lead = den.leading
        if lead != _ONE:
            inv = lead.inverse()
            num, den = num * inv, den * inv
        return RationalFn(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFn":
        if self.is_zero:
            raise ZeroDenominator("inverse of the zero function")
        return RationalFn(self.den, self.num)

    def __truediv__(self, other) -> "RationalFn":
        return self * RationalFn.coerce(other).inverse()

    def __rtruediv__(self, other) -> "RationalFn":
        return RationalFn.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFn":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFn(self.num**exponent, self.den**exponent, _reduced=True)

    def derivative(self) -> "RationalFn":
        if self.is_polynomial:
            return RationalFn.from_poly(self.num.derivative())
        n, d = self.num, self.den
        return RationalFn(n.derivative() * d - n * d.derivative(), d * d)

    def eval(self, x: ScalarLike) -> SqrtTwoScalar:
        dv = self.den.eval(x)
        if dv.is_zero:
            from .errors import PoleAtPoint

            raise PoleAtPoint(f"pole at x = {x}")
        return self.num.eval(x) / dv

    def __call__(self, x: ScalarLike) -> SqrtTwoScalar:
        return self.eval(x)

    def proportionality(self, other: "RationalFn") -> SqrtTwoScalar | None:
        """Scalar c with self == c*other, or None."""
        if self.is_zero:
            return _ONE if other.is_zero else _ZERO
        if other.is_zero or self.den != other.den:
            return None
        return self.num.proportionality(other.num)

    def to_json_dict(self) -> dict:
        return {
            "numerator": self.num.to_json_dict(),
            "denominator": self.den.to_json_dict(),
        }

    def __repr__(self) -> str:
        if self.is_polynomial:
            return f"RationalFn({self.num.pretty()})"
        return f"RationalFn(({self.num.pretty()}) / ({self.den.pretty()}))"


def log_derivative(p: ExactPoly) -> RationalFn:
    """(ln p)' = p'/p as a reduced rational function."""
    return RationalFn(p.derivative(), p)


class QuasiGaussian:
    """R(x) * exp(s*x^2/6) with R rational and s in {-1, 0, +1}.

    Closed under d/dx, multiplication by rational functions, and every
    first-order factor (+-d/dx + f); products only exist while the summed
    exponent stays in the class.
    """

    __slots__ = ("rational", "gauss_exponent")

    def __init__(self, rational: RationalFn | ExactPoly, gauss_exponent: int = 0) -> None:
        if gauss_exponent not in (-1, 0, 1):
            raise ValueError("gauss exponent must be -1, 0 or +1")
        object.__setattr__(self, "rational", RationalFn.coerce(rational))
        object.__setattr__(self, "gauss_exponent", gauss_exponent)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("QuasiGaussian is immutable")

    @property
    def is_zero(self) -> bool:
        return self.rational.is_zero

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuasiGaussian):
            return NotImplemented
        if self.is_zero and other.is_zero:
            return True
        return self.gauss_exponent == other.gauss_exponent and self.rational == other.rational

    def __hash__(self) -> int:
        return hash((self.rational, self.gauss_exponent if not self.is_zero else 0))

    def derivative(self) -> "QuasiGaussian":
        # (R e^{s x^2/6})' = (R' + (s x/3) R) e^{s x^2/6}
        r = self.rational
        term = r.derivative()
        if self.gauss_exponent:
            term = term + r * RationalFn(
                ExactPoly((_ZERO, SqrtTwoScalar(Fraction(self.gauss_exponent, 3)))),
                _reduced=True,
            )
        return QuasiGaussian(term, self.gauss_exponent)

    def __mul__(self, other):
        if isinstance(other, QuasiGaussian):
            s = self.gauss_exponent + other.gauss_exponent
            if abs(s) > 1:
                raise ValueError("product leaves the quasi-Gaussian class")
            return QuasiGaussian(self.rational * other.rational, s)
        return QuasiGaussian(self.rational * RationalFn.coerce(other), self.gauss_exponent)

    __rmul__ = __mul__

    def __add__(self, other: "QuasiGaussian") -> "QuasiGaussian":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.gauss_exponent != other.gauss_exponent:
            raise ValueError("sum of quasi-Gaussians with different exponents")
        return QuasiGaussian(self.rational + other.rational, self.gauss_exponent)

    def __sub__(self, other: "QuasiGaussian") -> "QuasiGaussian":
        return self + QuasiGaussian(-other.rational, other.gauss_exponent)

    def __neg__(self) -> "QuasiGaussian":
        return QuasiGaussian(-self.rational, self.gauss_exponent)

    def proportionality(self, other: "QuasiGaussian") -> SqrtTwoScalar | None:
        if self.is_zero:
            return _ONE if other.is_zero else _ZERO
        if other.is_zero or self.gauss_exponent != other.gauss_exponent:
            return None
        return self.rational.proportionality(other.rational)

    def __repr__(self) -> str:
        tail = {1: " * exp(x^2/6)", 0: "", -1: " * exp(-x^2/6)"}[self.gauss_exponent]
        return f"QuasiGaussian({self.rational!r}{tail})"


def apply_first_order(op_sign: int, f: RationalFn, g: QuasiGaussian) -> QuasiGaussian:
    """(op_sign * d/dx + f) applied to g, exactly."""
    if op_sign not in (-1, 1):
        raise ValueError("op_sign must be +1 or -1")
    dg = g.derivative()
    term = dg.rational if op_sign == 1 else -dg.rational
    return QuasiGaussian(term + f * g.rational, g.gauss_exponent)


@dataclass(frozen=True)
class GaussWronskian:
    """Wronskian of quasi-Gaussians: rational part and the total multiplier
    t of x^2/6 in the factored-out exponential prefactor exp(t*x^2/6)."""

    rational_part: RationalFn
    exponent_multiplier: int


def _det(matrix: Sequence[Sequence], zero):
    """Determinant by minor expansion memoized over column subsets."""
    n = len(matrix)
    memo: dict[tuple[int, tuple[int, ...]], object] = {}

    def minor(row: int, cols: tuple[int, ...]):
        if row == n:
            return None
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = None
        for idx, col in enumerate(cols):
            entry = matrix[row][col]
            sub_cols = cols[:idx] + cols[idx + 1 :]
            sub = minor(row + 1, sub_cols)
            term = entry if sub is None else entry * sub
            if idx % 2:
                term = -term
            acc = term if acc is None else acc + term
        memo[key] = acc
        return acc

    result = minor(0, tuple(range(n)))
    return zero if result is None else result


def wronskian(fs: Sequence):
    """Wronskian determinant of an ordered list of same-kind entries.

    ExactPoly entries yield an ExactPoly.  QuasiGaussian entries must share
    one gauss exponent s; the result is returned as a GaussWronskian whose
    exponential factor exp(l*s*x^2/6) is reported separately because l*s
    generally leaves the class.
    """
    entries = list(fs)
    if not entries:
        raise EmptyList("wronskian of an empty list")
    kinds = {type(e) for e in entries}
    if len(kinds) != 1:
        raise MixedKinds(f"wronskian entries of mixed kinds: {sorted(k.__name__ for k in kinds)}")
    n = len(entries)
    if isinstance(entries[0], ExactPoly):
        rows = [entries]
        for _ in range(n - 1):
            rows.append([p.derivative() for p in rows[-1]])
        return _det(rows, ExactPoly.zero())
    if isinstance(entries[0], QuasiGaussian):
        s = entries[0].gauss_exponent
        if any(e.gauss_exponent != s for e in entries):
            raise MixedKinds("quasi-Gaussian wronskian entries with different exponents")
        # Wr(e^G R_i) = e^{n G} det[(d/dx + G')^r R_i] with G = s x^2/6.
        gprime = RationalFn(
            ExactPoly((_ZERO, SqrtTwoScalar(Fraction(s, 3)))), _reduced=True
        )
        rows = [[e.rational for e in entries]]
        for _ in range(n - 1):
            prev = rows[-1]
            if s:
                rows.append([r.derivative() + gprime * r for r in prev])
            else:
                rows.append([r.derivative() for r in prev])
        det = _det(rows, RationalFn.zero())
        return GaussWronskian(det, n * s)
    raise MixedKinds(f"unsupported wronskian entry kind {type(entries[0]).__name__}")
