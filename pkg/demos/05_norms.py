"""
Norms
=====

Each ideal carries the modulus of its complex coordinate.  Adding the two
gives a norm on the whole algebra, within a factor of the Euclidean one.
"""

import math

import numpy as np

from walgebra import Element, combined_norm, euclid_norm, norm_minus, norm_plus
from walgebra.sampling import random_element
from walgebra.structure import dminus_from_params, dplus_from_params

print(norm_plus(dplus_from_params(0.5, 0)), norm_minus(dminus_from_params(0.5, 0)))
print(combined_norm(Element.one()))

# ratio of combined to Euclidean norm stays in [sqrt2, 2]
rng = np.random.default_rng(7)
ratios = [combined_norm(x) / euclid_norm(x) for x in (random_element(rng) for _ in range(2000))]
print(f"{min(ratios):.6f} .. {max(ratios):.6f}  (bounds {math.sqrt(2):.6f}, 2)")
