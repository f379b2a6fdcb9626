"""Multiplicative inverses in W.

Closed form: with ``v = ab(x)``,

    inverse(x) = conj(x) * (calA*1 - calB*Theta) / (calA**2 - calB**2)

since ``x * conj(x) = calA*1 + calB*Theta`` and ``Theta*Theta = 1``.
:func:`inverse_via_cpair` inverts the two complex coordinates instead and
serves as an independent cross-check.
"""

from __future__ import annotations

import warnings

from .element import Element, mul, smul, sub
from .scalars import field_of
from .structure import DomainError, IdealTag, ab, capital_theta, classify, conj, from_cpair, to_cpair

__all__ = ["NotInvertible", "ConditionWarning", "inverse", "inverse_via_cpair", "NEAR_SINGULAR"]

NEAR_SINGULAR = 1e-12


class NotInvertible(DomainError, ZeroDivisionError):
    """Raised for zero divisors and zero; ``tag`` says which ideal."""

    def __init__(self, x: Element, tag: IdealTag):
        super().__init__(f"{x} is not invertible ({tag})")
        self.element = x
        self.tag = tag


class ConditionWarning(RuntimeWarning):
    """Inverse of a float element close to the zero-divisor set."""


def inverse(x: Element, tol: float | None = None) -> Element:
    """Inverse of ``x``; raises :class:`NotInvertible` on zero divisors.

    For float input with ``|calA**2 - calB**2| < 1e-12 * calA**2`` the
    result is returned with a :class:`ConditionWarning`.  That can only
    happen when ``tol`` is set below the default, since the default
    classification already rejects such elements.
    """
    tag = classify(x, tol)
    if tag is not IdealTag.Invertible:
        raise NotInvertible(x, tag)
    v = ab(x)
    disc = v.discriminant
    if not x.is_exact and abs(disc) < NEAR_SINGULAR * v.calA * v.calA:
        warnings.warn(
            f"element {x} is within {abs(disc) / (v.calA * v.calA):.1e} of a zero divisor; "
            "inverse_via_cpair is more accurate here",
            ConditionWarning,
            stacklevel=2,
        )
    one = Element.one(x.is_exact)
    factor = sub(smul(v.calA, one), smul(v.calB, capital_theta(x.is_exact)))
    num = mul(conj(x), factor)
    return Element(*(c / disc for c in num))


def inverse_via_cpair(x: Element, tol: float | None = None) -> Element:
    """Invert both complex coordinates and map back.

    ``|zplus|**2 == calA + calB`` and ``|zminus|**2 == calA - calB``, so the
    zero tests use the same tolerance rule as :func:`classify`.
    """
    z = to_cpair(x)
    plus2, minus2 = z.zplus.abs2(), z.zminus.abs2()
    field = field_of(plus2, minus2, tol=tol)
    scale = (plus2 + minus2) / 2
    plus_zero, minus_zero = field.is_zero(plus2, scale), field.is_zero(minus2, scale)
    if plus_zero or minus_zero:
        tag = IdealTag.Zero if plus_zero and minus_zero else IdealTag.InDMinus if plus_zero else IdealTag.InDPlus
        raise NotInvertible(x, tag)
    return from_cpair(type(z)(z.zplus.reciprocal(), z.zminus.reciprocal()))
