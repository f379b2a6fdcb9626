"""Arithmetic in the 4-dimensional skew-circulant algebra W over the reals.

W is R^4 with basis 1, i, j, k and a commutative product in which
``i**4 = -1``.  It is isomorphic to skew-circulant 4x4 matrices, to
``R[y]/(y**4 + 1)`` and to ``C x C``.
"""

from .element import (
    Element,
    add,
    basis,
    dot,
    euclid_norm,
    format_element,
    inner,
    isclose,
    mul,
    neg,
    parse_element,
    power_basis,
    smul,
    sub,
)
from .inversion import ConditionWarning, NotInvertible, inverse, inverse_via_cpair
from .norms import combined_norm, norm_minus, norm_plus
from .representations import QuotientPoly, SkewCirculantMatrix, mat_mul, phi, phi_inv, poly_mul, psi, psi_inv
from .scalars import EXACT, FLOAT, ParseError, QSqrt2, parse_scalar, format_scalar, sqrt2
from .structure import (
    ABPair,
    CPair,
    DomainError,
    IdealTag,
    ab,
    capital_theta,
    classify,
    conj,
    dminus_from_params,
    dplus_from_params,
    from_cpair,
    idempotents,
    params_from,
    project,
    theta,
    to_cpair,
)

__version__ = "0.1.0"
