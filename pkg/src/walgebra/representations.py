"""Faithful representations of W.

``psi`` sends an element to a 4x4 skew-circulant Toeplitz matrix, ``phi``
to a polynomial modulo ``y**4 + 1``.  Matrix products are computed densely
(row by column) so they serve as an independent check of :func:`mul`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .element import Element
from .scalars import field_of, format_scalar

__all__ = [
    "SkewCirculantError",
    "SkewCirculantMatrix",
    "QuotientPoly",
    "psi",
    "psi_inv",
    "mat_mul",
    "phi",
    "phi_inv",
    "poly_mul",
    "det",
]


class SkewCirculantError(ArithmeticError):
    """A dense matrix that should be skew-circulant is not."""


def _entry(row, j: int, k: int):
    # sigma_{j,k} = sigma_{k-j} for k >= j, -sigma_{4+k-j} below the diagonal
    if k >= j:
        return row[k - j]
    return -row[4 + k - j]


@dataclass(frozen=True)
class SkewCirculantMatrix:
    """Skew-circulant matrix determined by its first row ``(a, b, c, d)``.

    Each row is the previous one shifted right with the wrapped entry
    negated::

        [ a  b  c  d]
        [-d  a  b  c]
        [-c -d  a  b]
        [-b -c -d  a]
    """

    first_row: tuple

    def __post_init__(self):
        if len(self.first_row) != 4:
            raise ValueError("first row must have 4 entries")
        object.__setattr__(self, "first_row", tuple(self.first_row))

    @classmethod
    def identity(cls, exact: bool = False) -> SkewCirculantMatrix:
        one, zero = (1, 0) if exact else (1.0, 0.0)
        return cls((one, zero, zero, zero))

    def entry(self, j: int, k: int):
        return _entry(self.first_row, j, k)

    def dense(self) -> list[list]:
        return [[_entry(self.first_row, j, k) for k in range(4)] for j in range(4)]

    @classmethod
    def from_dense(cls, rows, tol: float | None = None) -> SkewCirculantMatrix:
        """Validate the skew-circulant pattern of ``rows`` and compress it."""
        first = tuple(rows[0])
        field = field_of(*(v for r in rows for v in r), tol=tol)
        scale = max(1.0, max(abs(float(v)) for r in rows for v in r))
        for j in range(4):
            for k in range(4):
                if not field.eq(rows[j][k], _entry(first, j, k), scale):
                    raise SkewCirculantError(
                        f"entry ({j}, {k}) = {rows[j][k]!r} breaks the skew-circulant pattern"
                    )
        return cls(first)

    def __add__(self, other: SkewCirculantMatrix) -> SkewCirculantMatrix:
        return SkewCirculantMatrix(tuple(a + b for a, b in zip(self.first_row, other.first_row)))

    def __matmul__(self, other: SkewCirculantMatrix) -> SkewCirculantMatrix:
        return mat_mul(self, other)

    def to_text(self) -> str:
        """Four aligned rows, row-major."""
        cells = [[format_scalar(v) for v in row] for row in self.dense()]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def psi(x: Element) -> SkewCirculantMatrix:
    return SkewCirculantMatrix(tuple(x))


def psi_inv(m: SkewCirculantMatrix) -> Element:
    return Element(*m.first_row)


def mat_mul(a: SkewCirculantMatrix, b: SkewCirculantMatrix, tol: float | None = None) -> SkewCirculantMatrix:
    """Dense row-by-column product; raises if the result leaves the algebra."""
    da, db = a.dense(), b.dense()
    prod = [
        [sum((da[j][m] * db[m][k] for m in range(1, 4)), da[j][0] * db[0][k]) for k in range(4)]
        for j in range(4)
    ]
    return SkewCirculantMatrix.from_dense(prod, tol=tol)


def _perm_sign(p) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


_PERMS = [(p, _perm_sign(p)) for p in permutations(range(4))]


def det(m) -> object:
    """Leibniz determinant of a 4x4 matrix (dense rows or skew-circulant).

    Division free, so exact entries give an exact result.
    """
    rows = m.dense() if isinstance(m, SkewCirculantMatrix) else m
    total = None
    for p, s in _PERMS:
        term = rows[0][p[0]] * rows[1][p[1]] * rows[2][p[2]] * rows[3][p[3]]
        term = term if s > 0 else -term
        total = term if total is None else total + term
    return total


@dataclass(frozen=True)
class QuotientPoly:
    """Reduced representative ``c0 + c1*y + c2*y**2 + c3*y**3`` mod ``y**4 + 1``."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = list(self.coeffs)
        # fold higher powers with y**4 = -1
        while len(coeffs) > 4:
            top = coeffs.pop()
            n = len(coeffs)
            coeffs[n - 4] = coeffs[n - 4] - top
        zero = 0 if not coeffs else coeffs[0] * 0
        coeffs += [zero] * (4 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __mul__(self, other: QuotientPoly) -> QuotientPoly:
        return poly_mul(self, other)

    def __add__(self, other: QuotientPoly) -> QuotientPoly:
        return QuotientPoly(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __call__(self, y):
        """Evaluate the representative at ``y`` (Horner)."""
        as_float = isinstance(y, (float, complex))
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * y + (float(c) if as_float else c)
        return acc

    def to_text(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            s = format_scalar(c)
            if "sqrt2" in s and ("+" in s[1:] or "-" in s[1:]):
                s = f"({s})"
            terms.append(s if n == 0 else f"{s}*y" if n == 1 else f"{s}*y^{n}")
        return " + ".join(terms) if terms else "0"


def phi(x: Element) -> QuotientPoly:
    return QuotientPoly(tuple(x))


def phi_inv(p: QuotientPoly) -> Element:
    return Element(*p.coeffs)


def poly_mul(p: QuotientPoly, q: QuotientPoly) -> QuotientPoly:
    """Schoolbook product of degree <= 3 representatives, then reduction."""
    a, b = p.coeffs, q.coeffs
    full = [None] * 7
    for m in range(4):
        for n in range(4):
            t = a[m] * b[n]
            full[m + n] = t if full[m + n] is None else full[m + n] + t
    return QuotientPoly(tuple(full))

