"""Random elements for property checks and demos.

Exact coordinates are ``a + b*sqrt2`` with numerators in [-20, 20] and
denominators in {1, 2, 4} for both parts, which keeps exact arithmetic
cheap.  Float coordinates are uniform on [-10, 10].
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .element import Element
from .scalars import QSqrt2
from .structure import IdealTag, classify, dminus_from_params, dplus_from_params

__all__ = [
    "random_scalar",
    "random_element",
    "random_dplus",
    "random_dminus",
    "random_invertible",
    "random_zero_divisor",
]

_DENOMS = (1, 2, 4)


def _rational(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(-20, 21)), _DENOMS[int(rng.integers(0, 3))])


def random_scalar(rng: np.random.Generator, exact: bool = False, rational: bool = False):
    if not exact:
        return float(rng.uniform(-10.0, 10.0))
    return QSqrt2(_rational(rng), 0 if rational else _rational(rng))


def random_element(rng: np.random.Generator, exact: bool = False, rational: bool = False) -> Element:
    return Element(*(random_scalar(rng, exact, rational) for _ in range(4)))


def random_dplus(rng: np.random.Generator, exact: bool = False) -> Element:
    return dplus_from_params(random_scalar(rng, exact), random_scalar(rng, exact))


def random_dminus(rng: np.random.Generator, exact: bool = False) -> Element:
    return dminus_from_params(random_scalar(rng, exact), random_scalar(rng, exact))


def random_zero_divisor(rng: np.random.Generator, exact: bool = False) -> Element:
    """Nonzero element of D+ or D-, each with probability 1/2."""
    while True:
        x = random_dplus(rng, exact) if rng.random() < 0.5 else random_dminus(rng, exact)
        if classify(x) is not IdealTag.Zero:
            return x


def random_invertible(rng: np.random.Generator, exact: bool = False) -> Element:
    while True:
        x = random_element(rng, exact)
        if classify(x) is IdealTag.Invertible:
            return x
