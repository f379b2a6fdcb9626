"""Elements of the 4-dimensional algebra W and its skew-circulant product.

Coordinates are kept in the fixed order ``(1, i, j, k)``.  The product is
commutative and associative with identity ``ONE``; the basis obeys
``i*i = j``, ``i*j = k``, ``i*k = -1``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .scalars import FLOAT, ParseError, QSqrt2, field_of, format_scalar, is_exact, parse_scalar

__all__ = [
    "Element",
    "add",
    "neg",
    "sub",
    "smul",
    "mul",
    "power_basis",
    "dot",
    "inner",
    "norm_squared",
    "euclid_norm",
    "isclose",
    "basis",
    "parse_element",
    "format_element",
    "element_strings",
    "element_to_json",
    "element_from_json",
]


@dataclass(frozen=True)
class Element:
    """Coordinate vector ``x1*1 + xi*i + xj*j + xk*k``.

    Arithmetic operators follow the algebra: ``x * y`` is the skew-circulant
    product, ``2 * x`` the scalar action.

    >>> Element(0, 1, 0, 0) * Element(0, 0, 0, 1)
    Element(x1=-1, xi=0, xj=0, xk=0)
    """

    x1: object
    xi: object
    xj: object
    xk: object

    @classmethod
    def exact(cls, *coords) -> Element:
        """Element over Q(sqrt2); accepts ints, Fractions, QSqrt2 or scalar text."""
        if len(coords) == 1:
            coords = tuple(coords[0])
        return cls(*(
            parse_scalar(c, exact=True) if isinstance(c, str) else QSqrt2.coerce(c)
            for c in coords
        ))

    @classmethod
    def of(cls, *coords) -> Element:
        """Float element."""
        if len(coords) == 1:
            coords = tuple(coords[0])
        return cls(*(float(c) for c in coords))

    @classmethod
    def zero(cls, exact: bool = False) -> Element:
        return cls.exact(0, 0, 0, 0) if exact else cls.of(0, 0, 0, 0)

    @classmethod
    def one(cls, exact: bool = False) -> Element:
        return cls.exact(1, 0, 0, 0) if exact else cls.of(1, 0, 0, 0)

    def __iter__(self):
        yield self.x1
        yield self.xi
        yield self.xj
        yield self.xk

    def __len__(self) -> int:
        return 4

    def __getitem__(self, n: int):
        return (self.x1, self.xi, self.xj, self.xk)[n]

    @property
    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self)

    @property
    def field(self):
        return field_of(*self)

    def to_float(self) -> Element:
        return Element.of(self)

    def to_numpy(self) -> np.ndarray:
        return np.array([float(c) for c in self])

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        return sub(self, other)

    def __neg__(self) -> Element:
        return neg(self)

    def __mul__(self, other) -> Element:
        if isinstance(other, Element):
            return mul(self, other)
        return smul(other, self)

    def __rmul__(self, other) -> Element:
        return smul(other, self)

    def __truediv__(self, other) -> Element:
        if isinstance(other, Element):
            from .inversion import inverse

            return mul(self, inverse(other))
        return Element(*(c / other for c in self))

    def __pow__(self, n: int) -> Element:
        if n < 0:
            from .inversion import inverse

            return inverse(self) ** -n
        result = Element.one(self.is_exact)
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    def __str__(self) -> str:
        return format_element(self)


def add(x: Element, y: Element) -> Element:
    return Element(x.x1 + y.x1, x.xi + y.xi, x.xj + y.xj, x.xk + y.xk)


def neg(x: Element) -> Element:
    return Element(-x.x1, -x.xi, -x.xj, -x.xk)


def sub(x: Element, y: Element) -> Element:
    return Element(x.x1 - y.x1, x.xi - y.xi, x.xj - y.xj, x.xk - y.xk)


def smul(lam, x: Element) -> Element:
    return Element(lam * x.x1, lam * x.xi, lam * x.xj, lam * x.xk)


def mul(x: Element, y: Element) -> Element:
    """Skew-circulant product, coordinate formula of the definition."""
    X1, Xi, Xj, Xk = x
    Y1, Yi, Yj, Yk = y
    return Element(
        X1 * Y1 - Xi * Yk - Xj * Yj - Xk * Yi,
        X1 * Yi + Xi * Y1 - Xj * Yk - Xk * Yj,
        X1 * Yj + Xi * Yi + Xj * Y1 - Xk * Yk,
        X1 * Yk + Xi * Yj + Xj * Yi + Xk * Y1,
    )


def basis(name: str, exact: bool = False) -> Element:
    """One of ``"1"``, ``"i"``, ``"j"``, ``"k"``."""
    pos = "1ijk".index(name)
    coords = [0, 0, 0, 0]
    coords[pos] = 1
    return Element.exact(coords) if exact else Element.of(coords)


def power_basis(n: int, exact: bool = False) -> Element:
    """``i**n`` reduced with ``i**4 = -1``; period 8 in ``n``."""
    n %= 8
    sign = -1 if n >= 4 else 1
    coords = [0, 0, 0, 0]
    coords[n % 4] = sign
    return Element.exact(coords) if exact else Element.of(coords)


def dot(x: Element, y: Element):
    return x.x1 * y.x1 + x.xi * y.xi + x.xj * y.xj + x.xk * y.xk


def norm_squared(x: Element):
    return dot(x, x)


def inner(x: Element, y: Element):
    """Scalar product recovered from the norm by polarization.

    Agrees with :func:`dot` (exactly on the exact backend).
    """
    return (norm_squared(add(x, y)) - norm_squared(sub(x, y))) / 4


def euclid_norm(x: Element) -> float:
    return math.sqrt(float(norm_squared(x)))


def isclose(x: Element, y: Element, tol: float | None = None) -> bool:
    """Exact equality on exact elements, else max-abs difference within tol."""
    if x.is_exact and y.is_exact:
        return x == y
    tol = FLOAT.tol if tol is None else tol
    return all(abs(float(a) - float(b)) <= tol for a, b in zip(x, y))


# text and JSON forms -------------------------------------------------


def parse_element(text: str, exact: bool = False) -> Element:
    """Parse ``"[x1, xi, xj, xk]"``; raises :class:`ParseError` with position."""
    start = text.find("[")
    if start < 0 or text[:start].strip():
        raise ParseError("element must start with '['", text, len(text) - len(text.lstrip()))
    end = text.rfind("]")
    if end < start:
        raise ParseError("missing closing ']'", text, len(text))
    if text[end + 1 :].strip():
        raise ParseError("unexpected text after ']'", text, end + 1)
    coords = []
    pos = start + 1
    for piece in text[start + 1 : end].split(","):
        try:
            coords.append(parse_scalar(piece, exact=exact))
        except ParseError as err:
            raise ParseError(err.message, text, pos + err.position) from None
        pos += len(piece) + 1
    if len(coords) != 4:
        raise ParseError(f"expected 4 coordinates, got {len(coords)}", text, end)
    return Element(*coords)


def _common_denominator_text(coords) -> list[str]:
    values = [c.a for c in coords]
    dens = [f.denominator for f in values if f.denominator != 1]
    lcm = 1
    for d in dens:
        lcm = lcm * d // math.gcd(lcm, d)
    return [
        str(f.numerator) if f.denominator == 1 else f"{f.numerator * (lcm // f.denominator)}/{lcm}"
        for f in values
    ]


def element_strings(x: Element) -> list[str]:
    """Scalar text of each coordinate.

    Rational exact elements are written over one common denominator so the
    vector reads as a single fraction, e.g. ``31/194, -44/194``.
    Coordinates with a sqrt2 part are printed individually in lowest terms.
    """
    if x.is_exact:
        coords = [QSqrt2.coerce(c) for c in x]
        if all(c.is_rational() for c in coords):
            return _common_denominator_text(coords)
        return [format_scalar(c) for c in coords]
    return [format_scalar(float(c)) for c in x]


def format_element(x: Element) -> str:
    return "[" + ", ".join(element_strings(x)) + "]"


def element_to_json(x: Element) -> str:
    return json.dumps(element_strings(x))


def element_from_json(text: str, exact: bool = False) -> Element:
    values = json.loads(text)
    if not isinstance(values, list) or len(values) != 4:
        raise ParseError("JSON element must be an array of 4 scalars", text, 0)
    return Element(*(parse_scalar(str(v), exact=exact) for v in values))
