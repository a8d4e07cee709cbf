"""Sequences of the three-term recurrence V_{i+1} = a_i V_i - V_{i-1}
with n-periodic coefficients, broken lines, and the rotation index.

All arithmetic is exact.  The index is returned as a Fraction with
denominator 1 or 2; no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrices import Word, check_word
from .surgery import NotASolutionError, SolutionClass, solution_class


@dataclass(frozen=True)
class SLSequence:
    """Values V_0..V_m of the recurrence, with the generating word."""

    coefficients: Word
    values: tuple[int, ...]


def iterate(w: Sequence[int], v0: int, v1: int, steps: int) -> SLSequence:
    """Run the recurrence for ``steps`` steps, producing V_0..V_steps.

    The coefficient applied at step i is a_i = w[(i-1) mod n], so that
    (V_{n+1}, V_n) = M_n(a_1..a_n) (V_1, V_0).
    """
    word = check_word(w)
    if steps < 0:
        raise ValueError("steps must be >= 0")
    n = len(word)
    values = [v0, v1][:steps + 1]
    for i in range(1, steps):
        values.append(word[(i - 1) % n] * values[i] - values[i - 1])
    return SLSequence(word, tuple(values))


@dataclass(frozen=True)
class BrokenLine:
    """Points P_i = (V1_i, V2_i) built from the two basis sequences with
    initial data (1,0) and (0,1)."""

    points: tuple[tuple[int, int], ...]


def broken_line(w: Sequence[int], steps: int | None = None) -> BrokenLine:
    word = check_word(w)
    if steps is None:
        steps = len(word)
    s1 = iterate(word, 1, 0, steps)
    s2 = iterate(word, 0, 1, steps)
    points = tuple(zip(s1.values, s2.values))
    if any(p == (0, 0) for p in points):
        raise AssertionError("broken line passes through the origin")
    return BrokenLine(points)


def wronskian(b: BrokenLine) -> int:
    """The common cross product of consecutive points."""
    if len(b.points) < 2:
        raise ValueError("need at least two points")
    (x0, y0), (x1, y1) = b.points[0], b.points[1]
    w = x1 * y0 - x0 * y1
    for (xa, ya), (xb, yb) in zip(b.points, b.points[1:]):
        if xb * ya - xa * yb != w:
            raise AssertionError("Wronskian is not constant; broken invariant")
    if w == 0:
        raise AssertionError("Wronskian vanishes; the two sequences are dependent")
    return w


def rotation_index(w: Sequence[int]) -> Fraction:
    """Half-integer winding of the broken line over one period.

    Counts, over one period of the (0,1)-initial sequence, the zeros
    plus the strict sign changes; the index is half that count.  A zero
    value counts once and never also as a sign change (consecutive
    zeros are impossible).  For Problems I/II this equals (R+1)/2.  A
    Problem III word only closes up after doubling, so the value
    reported is the index of the doubled word (a Problem II solution).
    """
    word = check_word(w)
    cls = solution_class(word)
    if cls is SolutionClass.NOT_A_SOLUTION:
        raise NotASolutionError(word)
    if cls is SolutionClass.PROBLEM_III:
        word = word + word
    n = len(word)
    values = iterate(word, 0, 1, n).values
    s = sum(1 for i in range(n) if values[i] == 0)
    s += sum(1 for i in range(n) if values[i] * values[i + 1] < 0)
    return Fraction(s, 2)
