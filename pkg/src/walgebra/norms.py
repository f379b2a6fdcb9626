"""Norms on the ideals D+ and D- and the combined norm on W.

On D+ the norm is ``sqrt(calA + calB)`` and on D- it is ``sqrt(calA - calB)``;
both equal the modulus of the corresponding complex coordinate.  The
combined norm adds the norms of the two projections and satisfies
``sqrt2 * |||x||| <= ||x|| <= 2 * |||x|||``.

Square roots are taken in floating point on both backends.  The exact
radicands are available from :func:`norm_plus_squared` and
:func:`norm_minus_squared`.
"""

from __future__ import annotations

import math

from .element import Element
from .scalars import field_of
from .structure import DomainError, ab, classify, project, sos_decomposition

__all__ = [
    "norm_plus",
    "norm_minus",
    "norm_plus_squared",
    "norm_minus_squared",
    "combined_norm",
]


def _require(x: Element, plus: bool, tol: float | None) -> None:
    # membership test of one ideal only, so tiny elements near both are accepted
    v = ab(x)
    field = field_of(*x, tol=tol)
    if not field.is_zero(v.minus if plus else v.plus, v.calA):
        name, ideal = ("norm_plus", "D+") if plus else ("norm_minus", "D-")
        raise DomainError(f"{name} is defined on {ideal} only; {x} is {classify(x, tol)}")


def norm_plus_squared(x: Element):
    """``calA + calB`` as the sum of squares ``r+**2 + s+**2`` (never negative)."""
    _, _, r, s = sos_decomposition(x)
    return r * r + s * s


def norm_minus_squared(x: Element):
    """``calA - calB`` as ``r-**2 + s-**2``."""
    r, s, _, _ = sos_decomposition(x)
    return r * r + s * s


def norm_plus(x: Element, tol: float | None = None) -> float:
    _require(x, True, tol)
    return math.sqrt(float(norm_plus_squared(x)))


def norm_minus(x: Element, tol: float | None = None) -> float:
    _require(x, False, tol)
    return math.sqrt(float(norm_minus_squared(x)))


def combined_norm(x: Element) -> float:
    """``||x+||_+ + ||x-||_-`` for the projections ``(x+, x-)`` of ``x``."""
    x_plus, x_minus = project(x)
    # projections lie in their ideals by construction; skip the float membership test
    return math.sqrt(float(norm_plus_squared(x_plus))) + math.sqrt(float(norm_minus_squared(x_minus)))
