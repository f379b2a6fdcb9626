"""
Conjugation, zero divisors and the two ideals
=============================================
"""

from walgebra import Element, classify, conj, mul
from walgebra.structure import ab, capital_theta, dminus_from_params, dplus_from_params, project

x = Element.exact(1, 2, 3, 4)

# x times its conjugate sits in the plane spanned by 1 and Theta
v = ab(x)
print("x * conj(x) =", mul(x, conj(x)))
print("calA =", v.calA, " calB =", v.calB)
print("Theta * Theta =", mul(capital_theta(True), capital_theta(True)))

# calA = calB and calA = -calB cut out two planes of zero divisors
p = dplus_from_params(1, 2)
m = dminus_from_params(3, -1)
print(p, classify(p))
print(m, classify(m))
print("p * m =", mul(p, m))

# the idempotents split every element
xp, xm = project(x)
print("x+ =", xp, classify(xp))
print("x- =", xm, classify(xm))
print("x+ + x- == x:", xp + xm == x)
