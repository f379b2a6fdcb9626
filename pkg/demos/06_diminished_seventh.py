"""
The diminished-seventh chord
============================

c, dis, fis and a are three semitones apart.  Mapped to 1, i, j, k,
multiplying by ``i`` moves every tone up a minor third, and four steps
return to c with a sign flip that the ear cannot hear.
"""

from walgebra import Element
from walgebra.tet12 import Tone, frequency, parse_tone, pitch_name, sign_equivalent, tone_to_element, transpose

for name in ("c0", "dis0", "fis0", "a0", "c1"):
    print(name, round(frequency(parse_tone(name)), 4), "Hz")

x = tone_to_element(Tone(0))
for step in range(9):
    print(step, pitch_name(x), x)
    x = transpose(x, 1)

print(sign_equivalent(Element.one(), transpose(Element.one(), 4)))

# loudness is the scalar action
print(tone_to_element(Tone(3, 0, 0.5)))
