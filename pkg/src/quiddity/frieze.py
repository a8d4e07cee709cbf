"""Friezes of continuants, tameness and glide diagnostics, total
positivity, and Farey-polygon quiddities.

Row r of the frieze of a word (a_1..a_n) holds the cyclic continuants
K_r(a_i,...,a_{i+r-1}); row 0 is all 1s, row 1 is the word itself.
Two virtual rows K_{-1} = 0 and K_{-2} = -1 sit above the array and
take part in the tameness diamonds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .dissection import Dissection, quiddity as dissection_quiddity
from .matrices import Word, check_word, continuant
from .surgery import NotASolutionError, SolutionClass, solution_class


@dataclass(frozen=True)
class Frieze:
    word: Word
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def r_max(self) -> int:
        return len(self.rows) - 1

    def entry(self, r: int, i: int) -> int:
        # two virtual rows above the array close the tameness diamonds
        if r == -1:
            return 0
        if r == -2:
            return -1
        return self.rows[r][i % self.n]

    def to_json(self) -> dict:
        return {"word": list(self.word), "rows": [list(row) for row in self.rows]}


def frieze(w: Sequence[int], r_max: Optional[int] = None) -> Frieze:
    """Continuant frieze of a Problem II or III solution.

    Defaults: n-1 rows (r = 0..n-2) for Problem II, bordered by 1s on
    both sides; 2n-1 rows (r = 0..2n-2) for Problem III, where the word
    acts as an n-periodic coefficient sequence and the array is glide
    symmetric about its middle row.
    """
    word = check_word(w)
    cls = solution_class(word)
    if cls not in (SolutionClass.PROBLEM_II, SolutionClass.PROBLEM_III):
        raise NotASolutionError(word, "friezes are built from Problem II or III solutions")
    n = len(word)
    if r_max is None:
        r_max = n - 2 if cls is SolutionClass.PROBLEM_II else 2 * n - 2
    if r_max < 1:
        raise ValueError("need at least rows 0 and 1")
    rows = tuple(
        tuple(continuant(word[(i + k) % n] for k in range(r)) for i in range(n))
        for r in range(r_max + 1)
    )
    return Frieze(word, rows)


def check_diamond(f: Frieze) -> bool:
    """Unimodular rule: e(r,i) e(r,i+1) - e(r+1,i) e(r-1,i+1) = 1."""
    for r in range(f.r_max):
        for i in range(f.n):
            if f.entry(r, i) * f.entry(r, i + 1) - f.entry(r + 1, i) * f.entry(r - 1, i + 1) != 1:
                return False
    return True


def check_tame(f: Frieze) -> bool:
    """True iff every contiguous 3x3 diamond has determinant zero."""
    def det3(m):
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    for r in range(f.r_max - 1):
        for i in range(f.n):
            m = [[f.entry(r + t - s, i + s) for t in range(3)] for s in range(3)]
            if det3(m) != 0:
                return False
    return True


def check_glide(f: Frieze) -> bool:
    """Reflection symmetry of a full Problem III array: row m-2-r equals
    row r read with the column shift r+1, where m = 2n."""
    m = 2 * f.n
    if f.r_max != m - 2:
        raise ValueError("glide check needs the full array of 2n-1 rows")
    for r in range(f.r_max + 1):
        for i in range(f.n):
            if f.entry(m - 2 - r, i) != f.entry(r, i - r - 1):
                return False
    return True


def is_totally_positive(w: Sequence[int]) -> bool:
    """True iff all cyclic continuants K_{j+1}, j <= n-3, are positive.

    Applies to Problem II solutions directly and to Problem III
    solutions through their doubled word.
    """
    word = check_word(w)
    cls = solution_class(word)
    if cls is SolutionClass.PROBLEM_III:
        word = word + word
    elif cls is not SolutionClass.PROBLEM_II:
        raise NotASolutionError(word, "total positivity applies to Problem II or III solutions")
    n = len(word)
    for j in range(n - 2):
        for i in range(n):
            if continuant(word[(i + k) % n] for k in range(j + 1)) <= 0:
                return False
    return True


def render_text(f: Frieze, periods: int = 2) -> str:
    """Staggered text layout: consecutive rows offset by half a column,
    entries right-aligned."""
    width = max(len(str(f.entry(r, i))) for r in range(f.r_max + 1) for i in range(f.n)) + 2
    lines = []
    for r in range(f.r_max + 1):
        pad = " " * (width // 2) if r % 2 else ""
        cells = "".join(str(f.entry(r, i)).rjust(width) for i in range(f.n * periods))
        lines.append(pad + cells)
    return "\n".join(lines)


def farey_quiddity(order: int) -> Word:
    """Quiddity of the triangulated polygon on the Farey fractions of
    the given order in [0,1], with unimodular pairs joined."""
    if order < 2:
        raise ValueError("the Farey polygon needs order >= 2")
    fracs = sorted({Fraction(p, q) for q in range(1, order + 1) for p in range(q + 1)})
    n = len(fracs)
    diagonals = set()
    for i in range(n):
        for j in range(i + 1, n):
            if (j - i) % n in (1, n - 1):
                continue
            a, b = fracs[i], fracs[j]
            if abs(a.numerator * b.denominator - b.numerator * a.denominator) == 1:
                diagonals.add((i, j))
    return dissection_quiddity(Dissection(n, frozenset(diagonals)))
