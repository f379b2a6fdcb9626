"""
The basis and the product
=========================

Four coordinates, one product.  ``i`` generates everything: its powers run
through the basis and come back with a minus sign after four steps.
"""

from walgebra import Element, basis, mul, power_basis

one, i, j, k = (basis(n) for n in "1ijk")

# the multiplication table, row times column
for a, x in zip("1ijk", (one, i, j, k)):
    print(a, [str(mul(x, y)) for y in (one, i, j, k)])

# i**n cycles with period 8
print([str(power_basis(n)) for n in range(9)])

x = Element.of(1, 2, 3, 4)
y = Element.of(4, 3, 2, 1)
print("x * y =", x * y)

# the exact backend keeps sqrt2 symbolic
h = Element.exact("1/2", "1/4*sqrt2", 0, "-1/4*sqrt2")
print("h * h =", h * h)
