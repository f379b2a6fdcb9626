"""
Two complex numbers, and inverses
=================================

Through the ideals an element becomes a pair of complex numbers.  An
element is invertible when neither of them is zero.
"""

import cmath

from walgebra import Element, NotInvertible, inverse, inverse_via_cpair, mul, phi
from walgebra.structure import idempotents, to_cpair

x = Element.of(1, 2, 3, 4)
z = to_cpair(x)
print(z.as_complex())

# the same numbers come from evaluating the polynomial at two 8th roots of unity
p = phi(x)
print(p(cmath.exp(1j * cmath.pi / 4)), p(cmath.exp(5j * cmath.pi / 4)))

xe = Element.exact(1, 2, 3, 4)
y = inverse(xe)
print("inverse:", y)
print("check:", mul(xe, y))
print("via C x C:", inverse_via_cpair(xe))

e_plus, _ = idempotents(True)
try:
    inverse(e_plus)
except NotInvertible as err:
    print("no inverse:", err.tag)
