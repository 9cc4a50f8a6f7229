"""q-integers and the deterministic rational sample stream used by identity checks."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Union

from .errors import QisOne

Scalar = Union[int, Fraction]


def q_number(x: int, base: Scalar) -> Fraction:
    """The q-integer [x]_Q = (1 - Q^x) / (1 - Q).

    For x >= 0 this equals 1 + Q + ... + Q^{x-1}.  Refuses Q = 1; the caller
    must substitute the limit value x there.
    """
    q = Fraction(base)
    if q == 1:
        raise QisOne("[x]_Q has a removable singularity at Q = 1")
    return (1 - q**x) / (1 - q)


def q_sample_stream() -> Iterator[Fraction]:
    """Deterministic stream of distinct rationals > 1.

    Starts 2, 3, 4, 5/2, 7/2, 7/3 and then walks numerators upward, smaller
    denominators first.  Every value is positive and greater than 1, so the
    stream avoids all excluded points of the character-kernel identities
    (q in {0, -1}, q^d = -1) for every modulus d.
    """
    prefix = [Fraction(2), Fraction(3), Fraction(4), Fraction(5, 2), Fraction(7, 2), Fraction(7, 3)]
    seen = set(prefix)
    yield from prefix
    num = 2
    while True:
        num += 1
        for den in range(1, num):
            fr = Fraction(num, den)
            if fr <= 1 or fr in seen:
                continue
            seen.add(fr)
            yield fr


def q_samples(count: int) -> list[Fraction]:
    """First ``count`` values of q_sample_stream()."""
    stream = q_sample_stream()
    return [next(stream) for _ in range(count)]
