"""Scalar backends: double precision floats and exact numbers a + b*sqrt(2).

The algebra routines never branch on a backend object; they use ordinary
arithmetic operators, so any coordinate type with ``+ - * /`` works.  The
two supported coordinate types are :class:`float` and :class:`QSqrt2`.
:func:`field_of` picks the matching :class:`Field` helper when a routine
needs constants, tolerances or text conversion.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "QSqrt2",
    "Field",
    "FloatField",
    "ExactField",
    "FLOAT",
    "EXACT",
    "DEFAULT_TOL",
    "ParseError",
    "ScalarDivisionError",
    "field_of",
    "is_exact",
    "sqrt2",
    "scalar_arith",
    "parse_scalar",
    "format_scalar",
]

DEFAULT_TOL = 1e-9

_SQRT2 = math.sqrt(2.0)


class ScalarDivisionError(ZeroDivisionError):
    """Division by an exact zero or by a float below the field tolerance."""


class ParseError(ValueError):
    """Malformed scalar or element text.

    ``position`` is the 0-based offset into ``text`` where parsing failed.
    """

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(message)
        self.message = message
        self.text = text
        self.position = position

    def annotated(self) -> str:
        """Message plus the offending text with a caret under the failure."""
        return f"{self.message}\n  {self.text}\n  {' ' * self.position}^"


class QSqrt2:
    """Exact element ``a + b*sqrt(2)`` of the field Q(sqrt 2).

    Stored as integers ``(p, q, d)`` meaning ``(p + q*sqrt(2)) / d`` with
    ``d > 0`` and ``gcd(p, q, d) == 1``, which makes the representation
    unique.  ``a`` and ``b`` are exposed as reduced fractions.

    >>> r2 = QSqrt2(0, 1)
    >>> r2 * r2
    QSqrt2(2)
    >>> QSqrt2(1) / r2
    QSqrt2(0, 1/2)
    """

    __slots__ = ("_p", "_q", "_d")

    def __init__(self, a: Union[int, Fraction, str] = 0, b: Union[int, Fraction, str] = 0):
        a = Fraction(a)
        b = Fraction(b)
        d = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        self._set(a.numerator * (d // a.denominator), b.numerator * (d // b.denominator), d)

    def _set(self, p: int, q: int, d: int) -> None:
        g = math.gcd(p, q, d)
        if g != 1:
            p //= g
            q //= g
            d //= g
        self._p, self._q, self._d = p, q, d

    @classmethod
    def _raw(cls, p: int, q: int, d: int) -> QSqrt2:
        obj = object.__new__(cls)
        if d < 0:
            p, q, d = -p, -q, -d
        obj._set(p, q, d)
        return obj

    @classmethod
    def coerce(cls, value) -> QSqrt2:
        if isinstance(value, QSqrt2):
            return value
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            return cls._raw(value.numerator, 0, value.denominator)
        raise TypeError(f"cannot represent {value!r} exactly in Q(sqrt2)")

    @property
    def a(self) -> Fraction:
        """Rational part."""
        return Fraction(self._p, self._d)

    @property
    def b(self) -> Fraction:
        """Coefficient of sqrt(2)."""
        return Fraction(self._q, self._d)

    def is_rational(self) -> bool:
        return self._q == 0

    def galois(self) -> QSqrt2:
        """The field automorphism sqrt2 -> -sqrt2."""
        return QSqrt2._raw(self._p, -self._q, self._d)

    def field_norm(self) -> Fraction:
        """``a**2 - 2*b**2``; zero only for zero since sqrt(2) is irrational."""
        return Fraction(self._p * self._p - 2 * self._q * self._q, self._d * self._d)

    def sign(self) -> int:
        p, q = self._p, self._q
        if p >= 0 and q >= 0:
            return 0 if p == 0 and q == 0 else 1
        if p <= 0 and q <= 0:
            return -1
        # opposite signs: compare p**2 against 2*q**2
        diff = p * p - 2 * q * q
        return (1 if diff > 0 else -1) if p > 0 else (1 if diff < 0 else -1)

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, float):
            return float(self) + other
        try:
            o = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return QSqrt2._raw(self._p + o._p, self._q + o._q, d1)
        return QSqrt2._raw(self._p * d2 + o._p * d1, self._q * d2 + o._q * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> QSqrt2:
        return QSqrt2._raw(-self._p, -self._q, self._d)

    def __pos__(self) -> QSqrt2:
        return self

    def __sub__(self, other):
        if isinstance(other, float):
            return float(self) - other
        try:
            o = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, float):
            return float(self) * other
        try:
            o = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        p1, q1, p2, q2 = self._p, self._q, o._p, o._q
        return QSqrt2._raw(p1 * p2 + 2 * q1 * q2, p1 * q2 + q1 * p2, self._d * o._d)

    __rmul__ = __mul__

    def reciprocal(self) -> QSqrt2:
        n = self._p * self._p - 2 * self._q * self._q
        if n == 0:
            raise ScalarDivisionError("division by exact zero")
        # d / (p + q r2) = d (p - q r2) / (p^2 - 2 q^2)
        return QSqrt2._raw(self._d * self._p, -self._d * self._q, n)

    def __truediv__(self, other):
        if isinstance(other, float):
            if other == 0.0:
                raise ScalarDivisionError("division by zero")
            return float(self) / other
        try:
            o = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        if isinstance(other, float):
            return other / float(self)
        return QSqrt2.coerce(other) * self.reciprocal()

    def __pow__(self, n: int) -> QSqrt2:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.reciprocal()
        result = QSqrt2._raw(1, 0, 1)
        n = abs(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __abs__(self) -> QSqrt2:
        return -self if self.sign() < 0 else self

    # comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QSqrt2):
            return (self._p, self._q, self._d) == (other._p, other._q, other._d)
        if isinstance(other, (int, Fraction)):
            return self._q == 0 and Fraction(self._p, self._d) == other
        if isinstance(other, float):
            return float(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._q == 0:
            return hash(Fraction(self._p, self._d))
        return hash((self._p, self._q, self._d))

    def _cmp(self, other) -> int:
        if isinstance(other, float):
            f = float(self)
            return (f > other) - (f < other)
        return (self - QSqrt2.coerce(other)).sign()

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __bool__(self) -> bool:
        return self._p != 0 or self._q != 0

    # conversion -------------------------------------------------------

    def __float__(self) -> float:
        # a and b converted separately keeps 1e-16 relative accuracy unless
        # a and b*sqrt2 nearly cancel
        return float(Fraction(self._p, self._d)) + float(Fraction(self._q, self._d)) * _SQRT2

    def __repr__(self) -> str:
        if self._q == 0:
            return f"QSqrt2({self.a})"
        return f"QSqrt2({self.a}, {self.b})"

    def __str__(self) -> str:
        return format_scalar(self)


def is_exact(value) -> bool:
    return isinstance(value, (QSqrt2, int, Fraction)) and not isinstance(value, bool)


# text form -----------------------------------------------------------

_SIGN = re.compile(r"\s*([+-])")
_NUM = re.compile(r"\s*(\d+)(?:\s*/\s*(\d+))?")
_SQRT = re.compile(r"\s*(\*\s*)?sqrt2")
_FLOAT_RE = re.compile(r"\s*[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?\s*$")


def _parse_exact(text: str) -> QSqrt2:
    s = text
    a = b = Fraction(0)

    def fail(pos: int, what: str):
        raise ParseError(f"invalid exact scalar {s.strip()!r}: expected {what}", s, pos)

    def signed(pos: int):
        m = _SIGN.match(s, pos)
        return (-1 if m.group(1) == "-" else 1, m.end()) if m else (1, pos)

    def number(m) -> Fraction:
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            fail(m.start(2), "nonzero denominator")
        return Fraction(int(m.group(1)), den)

    sgn, i = signed(0)
    m = _NUM.match(s, i)
    if m:
        value = sgn * number(m)
        i = m.end()
        r = _SQRT.match(s, i)
        if r and r.group(1):
            b = value
            i = r.end()
        else:
            a = value
            m2 = _SIGN.match(s, i)
            if m2:
                sgn2, i = -1 if m2.group(1) == "-" else 1, m2.end()
                coef = Fraction(1)
                n2 = _NUM.match(s, i)
                if n2:
                    coef = number(n2)
                    i = n2.end()
                r = _SQRT.match(s, i)
                if not r or bool(r.group(1)) != bool(n2):
                    fail(len(s) - len(s[i:].lstrip()), "'*sqrt2'" if n2 else "a sqrt2 term")
                b = sgn2 * coef
                i = r.end()
    else:
        r = _SQRT.match(s, i)
        if not r or r.group(1):
            fail(len(s) - len(s[i:].lstrip()), "a rational or sqrt2")
        b = Fraction(sgn)
        i = r.end()
    rest = s[i:]
    if rest.strip():
        fail(len(s) - len(rest.lstrip()), "end of scalar")
    return QSqrt2(a, b)


def _parse_float(text: str) -> float:
    if _FLOAT_RE.match(text) is None:
        pos = next((n for n, ch in enumerate(text) if ch not in "0123456789.eE+- "), len(text))
        raise ParseError(f"invalid number {text.strip()!r}", text, pos)
    return float(text)


def parse_scalar(text: str, exact: bool = False):
    """Parse ``"p/q"``, ``"p/q+r/s*sqrt2"`` (exact) or a decimal literal.

    >>> parse_scalar("1/2-3/4*sqrt2", exact=True)
    QSqrt2(1/2, -3/4)
    >>> parse_scalar("0.25")
    0.25
    """
    return _parse_exact(text) if exact else _parse_float(text)


def _format_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_float(x: float) -> str:
    """Shortest round-trip text; integral values print without ``.0``."""
    x = float(x) + 0.0  # folds -0.0
    if not math.isfinite(x):
        return repr(x)
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def format_scalar(value) -> str:
    """Inverse of :func:`parse_scalar` for both backends.

    >>> format_scalar(QSqrt2(0, Fraction(1, 4)))
    '1/4*sqrt2'
    >>> format_scalar(-1.0)
    '-1'
    """
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        value = QSqrt2.coerce(value)
    if not isinstance(value, QSqrt2):
        return format_float(value)
    a, b = value.a, value.b
    if b == 0:
        return _format_fraction(a)
    tail = "sqrt2" if abs(b) == 1 else f"{_format_fraction(abs(b))}*sqrt2"
    if a == 0:
        return tail if b > 0 else "-" + tail
    return f"{_format_fraction(a)}{'+' if b > 0 else '-'}{tail}"


# fields --------------------------------------------------------------


@dataclass(frozen=True)
class Field:
    """Constants, comparisons and text I/O for one coordinate type."""

    name: str
    exact: bool
    tol: float = 0.0

    def convert(self, value):
        raise NotImplementedError

    def sqrt2(self):
        raise NotImplementedError

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def is_zero(self, value, scale=1.0) -> bool:
        """Exact test, or ``|value| <= tol * max(1, |scale|)`` for floats."""
        raise NotImplementedError

    def eq(self, a, b, scale=1.0) -> bool:
        return self.is_zero(a - b, scale)

    def parse(self, text: str):
        return parse_scalar(text, exact=self.exact)

    def format(self, value) -> str:
        return format_scalar(self.convert(value))


@dataclass(frozen=True)
class FloatField(Field):
    name: str = "float"
    exact: bool = False
    tol: float = DEFAULT_TOL

    def convert(self, value) -> float:
        return float(value)

    def sqrt2(self) -> float:
        return _SQRT2

    def is_zero(self, value, scale=1.0) -> bool:
        return abs(float(value)) <= self.tol * max(1.0, abs(float(scale)))


@dataclass(frozen=True)
class ExactField(Field):
    name: str = "exact"
    exact: bool = True

    def convert(self, value) -> QSqrt2:
        return QSqrt2.coerce(value)

    def sqrt2(self) -> QSqrt2:
        return QSqrt2(0, 1)

    def is_zero(self, value, scale=1.0) -> bool:
        return not QSqrt2.coerce(value)


FLOAT = FloatField()
EXACT = ExactField()


def field_of(*values, tol: float | None = None) -> Field:
    """EXACT when every value is exact, otherwise a float field.

    ``tol`` overrides the float comparison tolerance.
    """
    if all(is_exact(v) for v in values):
        return EXACT
    return FLOAT if tol is None else FloatField(tol=tol)


def sqrt2(exact: bool = False):
    """The constant sqrt(2) in the requested backend."""
    return EXACT.sqrt2() if exact else FLOAT.sqrt2()


def scalar_arith(a, b, op: str, field: Field | None = None):
    """Field arithmetic ``a op b`` with op in ``{"add", "sub", "mul", "div"}``.

    Float division by a divisor within the field tolerance of zero raises
    :class:`ScalarDivisionError` instead of returning inf or nan.
    """
    field = field or field_of(a, b)
    a, b = field.convert(a), field.convert(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if field.is_zero(b, scale=0.0) or (not field.exact and b == 0.0):
            raise ScalarDivisionError(f"division by {field.format(b)}")
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")
