"""Exact 2x2 integer matrix algebra for words of positive integers.

A word (a_1, ..., a_n) of positive integers is mapped to the matrix

    M(a_1, ..., a_n) = E(a_n) * E(a_{n-1}) * ... * E(a_1),

where E(a) = [[a, -1], [1, 0]].  Note the reversed order: the *last*
entry of the word is the *leftmost* factor.  All arithmetic is exact
(Python integers), so there is no overflow anywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]


@dataclass(frozen=True)
class Mat2:
    """2x2 integer matrix [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def inverse(self) -> "Mat2":
        det = self.det()
        if det != 1:
            raise ValueError(f"only determinant-1 matrices can be inverted here, got det={det}")
        return Mat2(self.d, -self.b, -self.c, self.a)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


IDENTITY = Mat2(1, 0, 0, 1)
NEG_IDENTITY = Mat2(-1, 0, 0, -1)

#: The order-4 generator [[0,-1],[1,0]]; equals E(0).
GEN_S = Mat2(0, -1, 1, 0)
#: The transvection [[1,1],[0,1]].
GEN_T = Mat2(1, 1, 0, 1)
#: The order-6 generator [[1,-1],[1,0]]; equals E(1).
GEN_L = Mat2(1, -1, 1, 0)


class MatrixClass(enum.Enum):
    IDENTITY = "identity"
    NEG_IDENTITY = "neg_identity"
    TRACE_ZERO = "trace_zero"
    OTHER = "other"


def check_word(w: Sequence[int]) -> Word:
    """Validate a word: non-empty, all entries integers >= 1."""
    word = tuple(w)
    if not word:
        raise ValueError("empty word")
    for x in word:
        if not isinstance(x, int) or x < 1:
            raise ValueError(f"word entries must be positive integers, got {x!r}")
    return word


def rotate(w: Sequence[int], k: int) -> Word:
    """Cyclic rotation: rotate(w, 1) starts with the second entry of w."""
    word = tuple(w)
    k %= len(word)
    return word[k:] + word[:k]


def canonical_rotation(w: Sequence[int]) -> Word:
    """Lexicographically least rotation of w."""
    word = tuple(w)
    return min(rotate(word, k) for k in range(len(word)))


def elementary(a: int) -> Mat2:
    """E(a) = [[a, -1], [1, 0]]; E(0) is the generator S."""
    return Mat2(a, -1, 1, 0)


def word_product(w: Sequence[int]) -> Mat2:
    """M(a_1..a_n) = E(a_n) * ... * E(a_1).  Rejects the empty word."""
    word = check_word(w)
    m = elementary(word[0])
    for a in word[1:]:
        m = elementary(a) * m
    return m


def rotundus(w: Sequence[int]) -> int:
    """Trace of the word product; cyclically invariant in w."""
    return word_product(w).trace()


def continuant(xs: Iterable[int]) -> int:
    """Tridiagonal determinant K(x_1..x_i) with off-diagonal 1s.

    Satisfies K_i = x_i * K_{i-1} - K_{i-2} with K_0 = 1, K_{-1} = 0.
    The empty sequence gives 1.
    """
    prev, cur = 0, 1
    for x in xs:
        prev, cur = cur, x * cur - prev
    return cur


def product_from_continuants(w: Sequence[int]) -> Mat2:
    """Word product assembled from four continuants; needs length >= 2."""
    word = check_word(w)
    if len(word) < 2:
        raise ValueError("continuant formula needs a word of length >= 2")
    return Mat2(
        continuant(word),
        -continuant(word[1:]),
        continuant(word[:-1]),
        -continuant(word[1:-1]),
    )


def classify_matrix(m: Mat2) -> MatrixClass:
    """Sort a determinant-1 matrix into Id / -Id / trace-zero / other.

    Trace zero is equivalent to m*m == -Id.  The first three cases are
    mutually exclusive for determinant 1.
    """
    if m.det() != 1:
        raise ValueError(f"expected determinant 1, got {m.det()}")
    if m == IDENTITY:
        return MatrixClass.IDENTITY
    if m == NEG_IDENTITY:
        return MatrixClass.NEG_IDENTITY
    if m.trace() == 0:
        return MatrixClass.TRACE_ZERO
    return MatrixClass.OTHER
