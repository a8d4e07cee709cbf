"""Surgery operations on words and reduction to base solutions.

Two local surgeries act on words of positive integers:

* type 1 ("glue"): insert a 1 between two entries and increment both
  neighbors.  The word product is unchanged.
* type 2 ("split"): replace an entry a by (a', 1, 1, a'') with
  a' + a'' = a + 1.  The word product changes sign.

Every word whose product is Id, -Id, or trace-zero can be brought down
to a base word ((1,1,1) for the first two, (1,2)/(2,1) for trace zero)
by inverting these surgeries.  ``reduce_word`` does this with a fixed
deterministic scan and returns a replayable certificate.

Positions are cyclic.  When a step acts across the wrap-around point of
the stored representative, the step carries a ``wrap`` count saying how
many of the inserted entries land at the front of the representative;
this is what makes certificate replay reproduce the original tuple
exactly, not merely up to rotation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .matrices import (
    MatrixClass,
    Word,
    check_word,
    classify_matrix,
    word_product,
)

BASES_CENTRAL = ((1, 2), (2, 1))
BASE_TRIANGLE = (1, 1, 1)


class NotASolutionError(ValueError):
    """Raised when a word's product is neither +-Id nor trace zero."""

    def __init__(self, word: Word, message: str = "word is not a solution"):
        super().__init__(f"{message}: {word}")
        self.word = word


class StepKind(enum.Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"


@dataclass(frozen=True)
class SurgeryStep:
    """One forward surgery step.

    ``position`` indexes the representative the step is applied to.  For
    TYPE2, ``split`` is the pair (a', a'').  ``wrap`` is the number of
    inserted entries placed at the front of the representative (0 for a
    plain splice; for TYPE2 it can be 1..3 and then position must be 0,
    for TYPE1 it can be 1 and then position must be the last index).
    """

    kind: StepKind
    position: int
    split: Optional[tuple[int, int]] = None
    wrap: int = 0


class SolutionClass(enum.Enum):
    PROBLEM_I = "I"
    PROBLEM_II = "II"
    PROBLEM_III = "III"
    NOT_A_SOLUTION = "none"


_MATRIX_TO_SOLUTION = {
    MatrixClass.IDENTITY: SolutionClass.PROBLEM_I,
    MatrixClass.NEG_IDENTITY: SolutionClass.PROBLEM_II,
    MatrixClass.TRACE_ZERO: SolutionClass.PROBLEM_III,
    MatrixClass.OTHER: SolutionClass.NOT_A_SOLUTION,
}


def solution_class(w: Sequence[int]) -> SolutionClass:
    """Which of the three equations (if any) the word solves."""
    return _MATRIX_TO_SOLUTION[classify_matrix(word_product(w))]


@dataclass(frozen=True)
class ReductionCertificate:
    """A base word plus forward steps that rebuild the original word."""

    base: Word
    steps: tuple[SurgeryStep, ...] = field(default_factory=tuple)

    @property
    def type1_count(self) -> int:
        """S: number of triangle-gluing (type 1) steps."""
        return sum(1 for s in self.steps if s.kind is StepKind.TYPE1)

    @property
    def type2_count(self) -> int:
        """R: number of entry-splitting (type 2) steps."""
        return sum(1 for s in self.steps if s.kind is StepKind.TYPE2)

    def replay(self) -> Word:
        w = self.base
        for step in self.steps:
            w = apply_step(w, step)
        return w


def apply_type1(w: Sequence[int], i: int, front: bool = False) -> Word:
    """Insert 1 between a_i and a_{i+1} (cyclically), incrementing both.

    For i == n-1 the insertion straddles the wrap-around; the new 1 is
    appended at the end unless ``front`` is set, in which case it becomes
    the first entry.
    """
    word = check_word(w)
    n = len(word)
    if not 0 <= i < n:
        raise ValueError(f"position {i} out of range for word of length {n}")
    if i < n - 1:
        if front:
            raise ValueError("front placement only applies at the wrap-around position")
        return word[:i] + (word[i] + 1, 1, word[i + 1] + 1) + word[i + 2:]
    bumped = (word[0] + 1,) + word[1:-1] + (word[-1] + 1,)
    return (1,) + bumped if front else bumped + (1,)


def apply_type2(
    w: Sequence[int], i: int, split: tuple[int, int], wrap: int = 0
) -> Word:
    """Replace a_i by (a', 1, 1, a'') with a' + a'' = a_i + 1.

    ``wrap`` in 1..3 places that many trailing entries of the inserted
    block at the front of the representative instead (requires i == 0);
    the cyclic word is the same either way.
    """
    word = check_word(w)
    n = len(word)
    if not 0 <= i < n:
        raise ValueError(f"position {i} out of range for word of length {n}")
    a1, a2 = split
    if a1 < 1 or a2 < 1 or a1 + a2 != word[i] + 1:
        raise ValueError(f"invalid split {split} for entry {word[i]}")
    block = (a1, 1, 1, a2)
    if wrap == 0:
        return word[:i] + block + word[i + 1:]
    if i != 0 or not 1 <= wrap <= 3:
        raise ValueError(f"invalid wrap {wrap} at position {i}")
    return block[4 - wrap:] + word[1:] + block[:4 - wrap]


def apply_step(w: Sequence[int], step: SurgeryStep) -> Word:
    if step.kind is StepKind.TYPE1:
        return apply_type1(w, step.position, front=bool(step.wrap))
    assert step.split is not None
    return apply_type2(w, step.position, step.split, wrap=step.wrap)


def _inverse_type1(word: Word, i: int) -> tuple[Word, SurgeryStep]:
    n = len(word)
    if n < 3:
        raise ValueError("word too short to undo a type-1 surgery")
    left, right = (i - 1) % n, (i + 1) % n
    if word[i] != 1 or word[left] < 2 or word[right] < 2:
        raise ValueError(f"no isolated 1 with neighbors >= 2 at position {i}")
    if i == 0:
        out = (word[1] - 1,) + word[2:-1] + (word[-1] - 1,)
        return out, SurgeryStep(StepKind.TYPE1, n - 2, wrap=1)
    if i == n - 1:
        out = (word[0] - 1,) + word[1:-2] + (word[-2] - 1,)
        return out, SurgeryStep(StepKind.TYPE1, n - 2)
    out = word[:i - 1] + (word[i - 1] - 1, word[i + 1] - 1) + word[i + 2:]
    return out, SurgeryStep(StepKind.TYPE1, i - 1)


def _inverse_type2(word: Word, i: int) -> tuple[Word, SurgeryStep]:
    n = len(word)
    if n < 5:
        raise ValueError("word too short to undo a type-2 surgery")
    if word[i] != 1 or word[(i + 1) % n] != 1:
        raise ValueError(f"no consecutive 1s starting at position {i}")
    q = (i - 1) % n  # first index of the fragment (a', 1, 1, a'')
    outer1, outer2 = word[q], word[(q + 3) % n]
    merged = outer1 + outer2 - 1
    if q <= n - 4:
        out = word[:q] + (merged,) + word[q + 4:]
        return out, SurgeryStep(StepKind.TYPE2, q, (outer1, outer2))
    wrap = q - (n - 4)  # 1, 2, or 3 fragment entries sat at the front
    out = (merged,) + word[wrap:q]
    return out, SurgeryStep(StepKind.TYPE2, 0, (outer1, outer2), wrap=wrap)


def inverse_type1(w: Sequence[int], i: int) -> Word:
    """Undo a type-1 surgery at the isolated 1 sitting at position i."""
    return _inverse_type1(check_word(w), i)[0]


def inverse_type2(w: Sequence[int], i: int) -> Word:
    """Undo a type-2 surgery; i points at the first of two adjacent 1s."""
    return _inverse_type2(check_word(w), i)[0]


def reduce_word(w: Sequence[int]) -> ReductionCertificate:
    """Deterministically reduce a solution word to its base.

    Scan order at each step: the first position (from 0) admitting an
    inverse type-2, else the first admitting an inverse type-1.  Length
    guards keep the intermediate words inside the solution sets: the
    result of an inverse type-2 must have length >= 3 for Id/-Id words
    and >= 2 for trace-zero words.
    """
    word = check_word(w)
    cls = solution_class(word)
    if cls is SolutionClass.NOT_A_SOLUTION:
        raise NotASolutionError(word)
    central = cls is SolutionClass.PROBLEM_III
    min_after_type2 = 2 if central else 3
    min_after_type1 = 2 if central else 3

    steps_reversed: list[SurgeryStep] = []
    cur = word
    while True:
        n = len(cur)
        if central and cur in BASES_CENTRAL:
            break
        if not central and cur == BASE_TRIANGLE:
            break
        step = None
        if n - 3 >= min_after_type2 and n >= 5:
            for i in range(n):
                if cur[i] == 1 and cur[(i + 1) % n] == 1:
                    cur, step = _inverse_type2(cur, i)
                    break
        if step is None and n - 1 >= min_after_type1:
            for i in range(n):
                if cur[i] == 1 and cur[(i - 1) % n] >= 2 and cur[(i + 1) % n] >= 2:
                    cur, step = _inverse_type1(cur, i)
                    break
        if step is None:
            raise NotASolutionError(word, "reduction got stuck")
        steps_reversed.append(step)

    cert = ReductionCertificate(cur, tuple(reversed(steps_reversed)))
    if cert.replay() != word:
        raise AssertionError(f"certificate replay mismatch for {word}")
    return cert


def classify(
    w: Sequence[int],
) -> tuple[SolutionClass, Optional[ReductionCertificate]]:
    """Solution class of a word, with a reduction certificate if it is one."""
    word = check_word(w)
    cls = solution_class(word)
    if cls is SolutionClass.NOT_A_SOLUTION:
        return cls, None
    cert = reduce_word(word)
    # parity cross-check: splits flip the product sign, (1,1,1) gives -Id
    if cls is SolutionClass.PROBLEM_I:
        ok = cert.base == BASE_TRIANGLE and cert.type2_count % 2 == 1
    elif cls is SolutionClass.PROBLEM_II:
        ok = cert.base == BASE_TRIANGLE and cert.type2_count % 2 == 0
    else:
        ok = cert.base in BASES_CENTRAL
    if not ok:
        raise AssertionError(f"certificate inconsistent with class {cls} for {word}")
    return cls, cert


def is_reduced(w: Sequence[int]) -> bool:
    """True if w contains no linear fragment (a,1,b) with a,b > 1 and no
    linear fragment (a,1,1,b).  Leading or trailing 1s are allowed."""
    word = check_word(w)
    n = len(word)
    for i in range(n - 2):
        if word[i] > 1 and word[i + 1] == 1 and word[i + 2] > 1:
            return False
    for i in range(n - 3):
        if word[i + 1] == 1 and word[i + 2] == 1:
            return False
    return True
