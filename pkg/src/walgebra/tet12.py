"""The diminished-seventh tones c, dis, fis, a as a 4-dimensional algebra.

The four pitch classes 0, 3, 6, 9 are three semitones apart.  The
embedding used here is a convention:

    c -> 1,  dis -> i,  fis -> j,  a -> k

Amplitude is the scalar action.  The octave only enters the frequency
computation and is discarded by the algebra map.  Multiplying by ``i``
moves a tone up three semitones, and ``i**4 = -1`` means the cycle
returns to c with a sign flip.  Tones ``T`` and ``-T`` are heard as the
same pitch, so modulo sign the transposition is the 4-cycle
c -> dis -> fis -> a -> c.

Pitch class ``p`` and octave ``k`` are semitone offsets from the
reference frequency ``a0``: ``f = a0 * 2**((p + 12k)/12)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .element import Element, isclose, mul, neg, power_basis, smul
from .scalars import ParseError

__all__ = [
    "PITCH_CLASSES",
    "PITCH_NAMES",
    "Tone",
    "parse_tone",
    "frequency",
    "tone_to_element",
    "transpose",
    "sign_equivalent",
    "pitch_name",
]

PITCH_CLASSES = {"c": 0, "dis": 3, "fis": 6, "a": 9}
PITCH_NAMES = {v: k for k, v in PITCH_CLASSES.items()}
OCTAVE_RANGE = range(-4, 5)
CAMERTONE = 440.0


@dataclass(frozen=True)
class Tone:
    pitch_class: int
    octave: int = 0
    amplitude: float = 1.0

    def __post_init__(self):
        if self.pitch_class not in PITCH_NAMES:
            raise ValueError(f"pitch class {self.pitch_class} is not one of c, dis, fis, a (0, 3, 6, 9)")
        if self.octave not in OCTAVE_RANGE:
            raise ValueError(f"octave {self.octave} outside [-4, 4]")
        if self.amplitude < 0:
            raise ValueError("amplitude must be non-negative")

    @property
    def name(self) -> str:
        return f"{PITCH_NAMES[self.pitch_class]}{self.octave}"

    def louder(self, factor: float) -> Tone:
        return Tone(self.pitch_class, self.octave, self.amplitude * factor)


_TONE_RE = re.compile(r"\s*(dis|fis|c|a)(-?\d+)?\s*$", re.IGNORECASE)


def parse_tone(text: str, amplitude: float = 1.0) -> Tone:
    """``"c4"``, ``"dis-1"``, ``"a"`` (octave 0)."""
    m = _TONE_RE.match(text)
    if m is None:
        pos = len(text) - len(text.lstrip())
        raise ParseError("expected a tone c, dis, fis or a followed by an octave number", text, pos)
    octave = int(m.group(2)) if m.group(2) else 0
    try:
        return Tone(PITCH_CLASSES[m.group(1).lower()], octave, amplitude)
    except ValueError as err:
        raise ParseError(str(err), text, m.start(2)) from None


def frequency(tone: Tone, a0: float = CAMERTONE) -> float:
    """``a0 * 2**((p + 12k)/12)`` in Hz.

    Computed as ``a0 * 2**k * 2**(p/12)`` so octave steps are exact
    doublings.
    """
    if a0 <= 0:
        raise ValueError("reference frequency must be positive")
    return a0 * 2.0 ** tone.octave * 2.0 ** (tone.pitch_class / 12)


def tone_to_element(tone: Tone, exact: bool = False) -> Element:
    amp = Fraction(tone.amplitude) if exact else float(tone.amplitude)
    return smul(amp, power_basis(tone.pitch_class // 3, exact=exact))


def transpose(x: Element, steps: int) -> Element:
    """Move ``x`` up ``3*steps`` semitones: ``x * i**steps``."""
    return mul(x, power_basis(steps, exact=x.is_exact))


def sign_equivalent(x: Element, y: Element, tol: float | None = None) -> bool:
    """True when ``y`` is ``x`` or ``-x``."""
    return isclose(x, y, tol) or isclose(x, neg(y), tol)


def pitch_name(x: Element, tol: float | None = None) -> str | None:
    """Name of the tone a signed, scaled basis element stands for, else None."""
    coords = [float(c) for c in x]
    nonzero = [n for n, c in enumerate(coords) if abs(c) > (tol or 1e-9)]
    if len(nonzero) != 1:
        return None
    return PITCH_NAMES[3 * nonzero[0]]
