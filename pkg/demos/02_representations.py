"""
Matrices and polynomials
========================

Every element is a skew-circulant 4x4 matrix and a polynomial modulo
``y**4 + 1``.  Both pictures multiply the same way.
"""

import numpy as np

from walgebra import Element, mat_mul, mul, phi, poly_mul, psi
from walgebra.representations import det
from walgebra.structure import ab

x = Element.exact(1, 2, 3, 4)
y = Element.exact(4, 3, 2, 1)

print(psi(x).to_text())
print()

# matrix product and polynomial product land on the same element
print(mat_mul(psi(x), psi(y)) == psi(mul(x, y)))
print(poly_mul(phi(x), phi(y)) == phi(mul(x, y)))
print(phi(mul(x, y)).to_text())

# the determinant factors through calA and calB
v = ab(x)
print("det =", det(psi(x)), " calA**2 - calB**2 =", v.discriminant)
print("numpy:", np.linalg.det(np.array(psi(x.to_float()).dense())))
