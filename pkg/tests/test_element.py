import math

import numpy as np
import pytest
from hypothesis import given

from conftest import assert_close, exact_elements, float_elements
from walgebra.element import (
    Element,
    add,
    basis,
    dot,
    element_from_json,
    element_to_json,
    euclid_norm,
    format_element,
    inner,
    mul,
    neg,
    parse_element,
    power_basis,
    smul,
)
from walgebra.scalars import ParseError


def psi_dense(x):
    """Skew-circulant matrix written out entry by entry, as displayed."""
    a, b, c, d = (float(v) for v in x)
    return np.array([[a, b, c, d], [-d, a, b, c], [-c, -d, a, b], [-b, -c, -d, a]])


def oracle_mul(x, y):
    return Element.of((psi_dense(x) @ psi_dense(y))[0])


ONE, I, J, K = (basis(n, exact=True) for n in "1ijk")

# products of the basis, row times column
TABLE = {
    ("1", "1"): ONE, ("1", "i"): I, ("1", "j"): J, ("1", "k"): K,
    ("i", "1"): I, ("i", "i"): J, ("i", "j"): K, ("i", "k"): -ONE,
    ("j", "1"): J, ("j", "i"): K, ("j", "j"): -ONE, ("j", "k"): -I,
    ("k", "1"): K, ("k", "i"): -ONE, ("k", "j"): -I, ("k", "k"): -J,
}


def test_componentwise_ops():
    assert add(Element.exact(1, 2, 3, 4), Element.exact(4, 3, 2, 1)) == Element.exact(5, 5, 5, 5)
    assert neg(ONE) == Element.exact(-1, 0, 0, 0)
    assert smul(2, Element.exact(1, "1/2", 0, "-1/2")) == Element.exact(2, 1, 0, -1)


@pytest.mark.parametrize("pair", sorted(TABLE))
def test_basis_table(pair):
    x, y = (basis(n, exact=True) for n in pair)
    assert mul(x, y) == TABLE[pair]


def test_identity_and_golden_product():
    x = Element.exact(1, 2, 3, 4)
    assert mul(ONE, x) == x
    # golden value computed by the dense matrix oracle
    assert_close(oracle_mul(x, Element.of(4, 3, 2, 1)), Element.of(-16, 0, 16, 30), 0)
    assert mul(x, Element.exact(4, 3, 2, 1)) == Element.exact(-16, 0, 16, 30)


def test_power_basis():
    assert power_basis(0) == Element.of(1, 0, 0, 0)
    assert power_basis(3) == Element.of(0, 0, 0, 1)
    assert power_basis(4) == Element.of(-1, 0, 0, 0)
    assert power_basis(8) == Element.of(1, 0, 0, 0)
    assert power_basis(-1) == Element.of(0, 0, 0, -1)


@pytest.mark.parametrize("n", range(-16, 17))
def test_power_basis_matches_repeated_product(n):
    assert power_basis(n + 8, exact=True) == power_basis(n, exact=True)
    if n >= 0:
        assert I ** n == power_basis(n, exact=True)


def test_norms_and_inner():
    assert euclid_norm(Element.of(1, 0, 0, 0)) == 1
    assert math.isclose(euclid_norm(Element.of(1, 2, 3, 4)), math.sqrt(30))
    assert math.isclose(euclid_norm(Element.of(1, 2, 3, 4)), 5.477225575, rel_tol=1e-10)
    assert inner(I, K) == 0


@given(exact_elements(), exact_elements(), exact_elements())
def test_ring_axioms_exact(x, y, z):
    assert mul(x, y) == mul(y, x)
    assert mul(mul(x, y), z) == mul(x, mul(y, z))
    assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
    assert mul(ONE, x) == x
    assert mul(Element.zero(True), x) == Element.zero(True)


@given(float_elements(), float_elements(), float_elements())
def test_ring_axioms_float(x, y, z):
    assert_close(mul(x, y), mul(y, x))
    assert_close(mul(mul(x, y), z), mul(x, mul(y, z)))
    assert_close(mul(x, add(y, z)), add(mul(x, y), mul(x, z)))


@given(float_elements(), float_elements())
def test_mul_agrees_with_matrix_oracle(x, y):
    assert_close(mul(x, y), oracle_mul(x, y))


@given(exact_elements(), exact_elements())
def test_polarization_exact(x, y):
    assert inner(x, y) == dot(x, y)


@given(float_elements(), float_elements())
def test_polarization_float(x, y):
    assert abs(inner(x, y) - dot(x, y)) <= 1e-9 * max(1.0, abs(dot(x, y)))


def test_operators():
    x = Element.exact(1, 2, 3, 4)
    assert x * I == mul(x, I)
    assert 2 * x == x * 2 == smul(2, x)
    assert x - x == Element.zero(True)
    assert (x / x) == ONE
    assert x ** 3 == mul(x, mul(x, x))


@given(exact_elements())
def test_text_round_trip_exact(x):
    assert parse_element(format_element(x), exact=True) == x
    assert element_from_json(element_to_json(x), exact=True) == x


@given(float_elements())
def test_text_round_trip_float(x):
    assert parse_element(format_element(x)) == x
    assert element_from_json(element_to_json(x)) == x


def test_format():
    assert format_element(Element.of(-1, 0, 0, -0.0)) == "[-1, 0, 0, 0]"
    assert format_element(Element.exact("31/194", "-22/97", "3/194", "1/97")) == "[31/194, -44/194, 3/194, 2/194]"
    assert format_element(Element.exact("1/2", "1/4*sqrt2", 0, "-1/4*sqrt2")) == "[1/2, 1/4*sqrt2, 0, -1/4*sqrt2]"
    assert element_to_json(Element.exact(1, 2, 3, 4)) == '["1", "2", "3", "4"]'


@pytest.mark.parametrize(
    "text, pos",
    [
        ("[1, 2, x, 4]", 7),
        ("1, 2, 3, 4]", 0),
        ("[1, 2, 3]", 8),
        ("[1, 2, 3, 4", 11),
        ("[1, 2, 3, 4] extra", 12),
    ],
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_element(text)
    assert info.value.position == pos
