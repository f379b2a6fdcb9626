"""Conjugation, the quadratic functionals and the ideal decomposition of W.

``x * conj(x)`` always lands in the plane spanned by ``1`` and
``Theta = (i - k)/sqrt2``::

    x * conj(x) = calA(x) * 1 + calB(x) * Theta

The zero divisors form two ideals, ``D+`` (where ``calA == calB``) and
``D-`` (where ``calA == -calB``).  Each is a copy of the complex numbers
with its own identity, and W splits as their direct sum.  The idempotents
``e+`` and ``e-`` implement the split; :func:`to_cpair` reads off the two
complex coordinates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .element import Element, add, mul, smul
from .scalars import QSqrt2, field_of, sqrt2

__all__ = [
    "DomainError",
    "IdealTag",
    "ABPair",
    "Gaussian",
    "CPair",
    "conj",
    "ab",
    "theta",
    "capital_theta",
    "pi_plane_mul",
    "pi_plane_element",
    "pi_plane_coords",
    "quartic_identity_check",
    "sos_decomposition",
    "classify",
    "dplus_from_params",
    "dminus_from_params",
    "params_from",
    "idempotents",
    "ideal_basis",
    "project",
    "to_cpair",
    "from_cpair",
]


class DomainError(ValueError):
    """Input outside the set on which an operation is defined."""


class IdealTag(enum.Enum):
    InDPlus = "InDPlus"
    InDMinus = "InDMinus"
    Invertible = "Invertible"
    Zero = "Zero"

    def __str__(self) -> str:
        return self.value


def _r2(x: Element):
    return sqrt2(x.is_exact)


def _half(exact: bool):
    return QSqrt2(1, 0) / 2 if exact else 0.5


def conj(x: Element) -> Element:
    """Triangle conjugation ``(X1, Xi, Xj, Xk) -> (X1, -Xk, -Xj, -Xi)``."""
    return Element(x.x1, -x.xk, -x.xj, -x.xi)


@dataclass(frozen=True)
class ABPair:
    """``calA`` is the squared Euclidean length, ``calB = sqrt2 * B``."""

    calA: object
    calB: object

    @property
    def plus(self):
        return self.calA + self.calB

    @property
    def minus(self):
        return self.calA - self.calB

    @property
    def discriminant(self):
        """``calA**2 - calB**2``, zero exactly on zero divisors."""
        return self.plus * self.minus


def _functional_b(x: Element):
    X1, Xi, Xj, Xk = x
    return X1 * Xi + Xi * Xj + Xj * Xk - Xk * X1


def ab(x: Element) -> ABPair:
    X1, Xi, Xj, Xk = x
    return ABPair(X1 * X1 + Xi * Xi + Xj * Xj + Xk * Xk, _r2(x) * _functional_b(x))


def theta(exact: bool = False) -> Element:
    """``i - k``."""
    return Element.exact(0, 1, 0, -1) if exact else Element.of(0, 1, 0, -1)


def capital_theta(exact: bool = False) -> Element:
    """``(i - k) / sqrt2``, a unit vector with ``Theta * Theta = 1``."""
    h = sqrt2(exact) / 2
    zero = h * 0
    return Element(zero, h, zero, -h)


def pi_plane_mul(p, q):
    """Split-complex product on coordinates over ``{1, Theta}``.

    >>> pi_plane_mul((1, 1), (1, -1))
    (0, 0)
    """
    a, b = p
    c, d = q
    return (a * c + b * d, a * d + b * c)


def pi_plane_element(a, b) -> Element:
    """``a * 1 + b * Theta``."""
    exact = field_of(a, b).exact
    return add(smul(a, Element.one(exact)), smul(b, capital_theta(exact)))


def pi_plane_coords(y: Element, tol: float | None = None):
    """Coordinates of ``y`` over ``{1, Theta}``; DomainError off the plane."""
    field = field_of(*y, tol=tol)
    scale = max(abs(float(c)) for c in y)
    if not (field.is_zero(y.xj, scale) and field.is_zero(y.xi + y.xk, scale)):
        raise DomainError(f"{y} is not in span{{1, Theta}}")
    return (y.x1, y.xi * sqrt2(field.exact))


def quartic_identity_check(x: Element):
    """Residuals of the two quartic identities for ``4*(calA -/+ calB)``.

    Both are zero exactly on the exact backend; float residuals are
    rounding noise.
    """
    X1, Xi, Xj, Xk = x
    r2 = _r2(x)
    sum_sq = (X1 + Xi) ** 2 + (Xi + Xj) ** 2 + (Xj + Xk) ** 2 + (Xk - X1) ** 2
    diff_sq = (X1 - Xi) ** 2 + (Xi - Xj) ** 2 + (Xj - Xk) ** 2 + (Xk + X1) ** 2
    v = ab(x)
    res_minus = 4 * v.minus - ((1 - r2) * sum_sq + (1 + r2) * diff_sq)
    res_plus = 4 * v.plus - ((1 + r2) * sum_sq + (1 - r2) * diff_sq)
    return res_minus, res_plus


def sos_decomposition(x: Element):
    """``(r-, s-, r+, s+)`` with ``r-**2 + s-**2 == calA - calB`` and
    ``r+**2 + s+**2 == calA + calB``."""
    X1, Xi, Xj, Xk = x
    h = _r2(x) / 2  # 1/sqrt2
    r_minus = X1 * h - Xi + Xj * h
    s_minus = X1 * h - Xj * h + Xk
    r_plus = X1 * h + Xi + Xj * h
    s_plus = X1 * h - Xj * h - Xk
    return r_minus, s_minus, r_plus, s_plus


def classify(x: Element, tol: float | None = None) -> IdealTag:
    """Which ideal ``x`` lies in, or Invertible.

    Float inputs are compared with ``|calA -/+ calB| <= tol * max(1, calA)``.
    """
    field = field_of(*x, tol=tol)
    if all(field.is_zero(c) for c in x):
        return IdealTag.Zero
    v = ab(x)
    in_plus, in_minus = field.is_zero(v.minus, v.calA), field.is_zero(v.plus, v.calA)
    if in_plus and in_minus:
        # tiny float element within tolerance of both ideals: take the nearer
        return IdealTag.InDPlus if abs(v.minus) <= abs(v.plus) else IdealTag.InDMinus
    if in_plus:
        return IdealTag.InDPlus
    if in_minus:
        return IdealTag.InDMinus
    return IdealTag.Invertible


def dplus_from_params(alpha, beta) -> Element:
    """``(a, (a+b)/sqrt2, b, (b-a)/sqrt2)``, the general element of D+."""
    h = sqrt2(field_of(alpha, beta).exact) / 2
    return Element(alpha + 0 * h, (alpha + beta) * h, beta + 0 * h, (beta - alpha) * h)


def dminus_from_params(gamma, delta) -> Element:
    """``(g, -(g+d)/sqrt2, d, (g-d)/sqrt2)``, the general element of D-."""
    h = sqrt2(field_of(gamma, delta).exact) / 2
    return Element(gamma + 0 * h, -(gamma + delta) * h, delta + 0 * h, (gamma - delta) * h)


def params_from(x: Element, tol: float | None = None):
    """Recover the ideal parameters ``(X1, Xj)`` of a zero divisor."""
    tag = classify(x, tol)
    if tag is IdealTag.Invertible:
        raise DomainError(f"{x} is invertible, not in D+ or D-")
    return x.x1, x.xj


def ideal_basis(exact: bool = False):
    """``(e+, i+, e-, i-)``: identity and imaginary unit of each ideal."""
    half = _half(exact)
    zero = half * 0
    return (
        dplus_from_params(half, zero),
        dplus_from_params(zero, half),
        dminus_from_params(half, zero),
        dminus_from_params(zero, half),
    )


def idempotents(exact: bool = False):
    """``(e+, e-)`` with ``e+ * e- == 0`` and ``e+ + e- == 1``."""
    e_plus, _, e_minus, _ = ideal_basis(exact)
    return e_plus, e_minus


def project(x: Element):
    """Components ``(x * e+, x * e-)`` of the direct-sum decomposition."""
    e_plus, e_minus = idempotents(x.is_exact)
    return mul(x, e_plus), mul(x, e_minus)


@dataclass(frozen=True)
class Gaussian:
    """Complex number over either scalar backend."""

    re: object
    im: object

    @classmethod
    def of(cls, z) -> Gaussian:
        if isinstance(z, Gaussian):
            return z
        z = complex(z)
        return cls(z.real, z.imag)

    def __add__(self, other: Gaussian) -> Gaussian:
        other = Gaussian.of(other)
        return Gaussian(self.re + other.re, self.im + other.im)

    def __sub__(self, other: Gaussian) -> Gaussian:
        other = Gaussian.of(other)
        return Gaussian(self.re - other.re, self.im - other.im)

    def __neg__(self) -> Gaussian:
        return Gaussian(-self.re, -self.im)

    def __mul__(self, other) -> Gaussian:
        if not isinstance(other, (Gaussian, complex)):
            return Gaussian(self.re * other, self.im * other)
        other = Gaussian.of(other)
        return Gaussian(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def reciprocal(self) -> Gaussian:
        n = self.abs2()
        return Gaussian(self.re / n, -self.im / n)

    def __abs__(self) -> float:
        return abs(complex(self))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)


@dataclass(frozen=True)
class CPair:
    """Image of an element under W -> C x C; arithmetic is componentwise."""

    zplus: Gaussian
    zminus: Gaussian

    @classmethod
    def of(cls, zplus, zminus) -> CPair:
        return cls(Gaussian.of(zplus), Gaussian.of(zminus))

    def __add__(self, other: CPair) -> CPair:
        return CPair(self.zplus + other.zplus, self.zminus + other.zminus)

    def __mul__(self, other: CPair) -> CPair:
        return CPair(self.zplus * other.zplus, self.zminus * other.zminus)

    def as_complex(self) -> tuple[complex, complex]:
        return complex(self.zplus), complex(self.zminus)

    def to_json_obj(self, fmt=str) -> dict:
        return {
            "zplus": [fmt(self.zplus.re), fmt(self.zplus.im)],
            "zminus": [fmt(self.zminus.re), fmt(self.zminus.im)],
        }


def to_cpair(x: Element) -> CPair:
    """Complex coordinates of the D+ and D- components of ``x``.

    The D+ part ``a*e+ + b*i+`` has first coordinate ``a/2`` and third
    ``b/2``, so doubling those two coordinates recovers ``a + b*i``.
    """
    x_plus, x_minus = project(x)
    return CPair(
        Gaussian(2 * x_plus.x1, 2 * x_plus.xj),
        Gaussian(2 * x_minus.x1, 2 * x_minus.xj),
    )


def from_cpair(z: CPair) -> Element:
    exact = field_of(z.zplus.re, z.zplus.im, z.zminus.re, z.zminus.im).exact
    e_plus, i_plus, e_minus, i_minus = ideal_basis(exact)
    out = smul(z.zplus.re, e_plus)
    out = add(out, smul(z.zplus.im, i_plus))
    out = add(out, smul(z.zminus.re, e_minus))
    return add(out, smul(z.zminus.im, i_minus))

