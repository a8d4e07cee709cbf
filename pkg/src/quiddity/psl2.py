"""Reduced positive decompositions in the modular group.

Every determinant-1 integer matrix A equals, up to sign, a product
E(a_n)...E(a_1) with positive entries, and exactly one such word is
reduced (no linear fragment (a,1,b) with a,b > 1, no interior fragment
(a,1,1,b)).  ``reduced_decomposition`` computes that word: a Euclidean
column reduction peels off E(q) factors with arbitrary integer q, the
nonpositive entries are removed with the identities

    M(..., x, y, ...)   = M(..., x+1, 1, y+1, ...)
    M(..., c, 1, 1, d, ...) = -M(..., c+d-1, ...)

and the linear inverse surgeries then drive the word to reduced form.

Concatenating the reduced words of A and of A^{-1} gives the quiddity
of A, a Problem I or II solution, hence the quiddity of an actual
dissection with a rotation index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from . import limits
from .dissection import Dissection, dissections_with_quiddity, from_certificate
from .matrices import IDENTITY, Mat2, NEG_IDENTITY, Word, word_product
from .surgery import (
    SolutionClass,
    is_reduced,
    reduce_word,
    solution_class,
)
from .sturm import rotation_index

#: Positive word for S = [[0,-1],[1,0]]: word_product((1,1,2,1,1)) == -S.
WORD_S = (1, 1, 2, 1, 1)


def _canonical_sign(m: Mat2) -> Mat2:
    for x in (m.a, m.b, m.c, m.d):
        if x > 0:
            return m
        if x < 0:
            return -m
    raise ValueError("zero matrix cannot occur with determinant 1")


@dataclass(frozen=True)
class GroupElement:
    """A determinant-1 matrix considered up to global sign."""

    representative: Mat2

    def __post_init__(self):
        if self.representative.det() != 1:
            raise ValueError(f"determinant must be 1, got {self.representative.det()}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        a, b = self.representative, other.representative
        return a == b or a == -b

    def __hash__(self) -> int:
        return hash(_canonical_sign(self.representative))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.representative.inverse())


def _as_matrix(a) -> Mat2:
    if isinstance(a, GroupElement):
        return a.representative
    return a


def _euclid_word(a: Mat2) -> list[int]:
    """An integer-entry word w with word_product(w) == +-a."""
    entries_left: list[int] = []  # peeled q's, leftmost factor first
    b = a
    while b.c != 0:
        # E(q)^{-1} b has bottom-left q*b.c - b.a; pick q to shrink it
        q = round(Fraction(b.a, b.c))
        entries_left.append(q)
        b = Mat2(b.c, b.d, q * b.c - b.a, q * b.d - b.b)
    # now b = +-T^m with m = b.a * b.b, and T^m = -M((0, m))
    tail = [0, b.a * b.b]
    return tail + list(reversed(entries_left))


def _positify(entries: list[int]) -> list[int]:
    """Remove entries < 1 using the type-1 identity, which is valid for
    arbitrary integers and preserves the product."""
    w = list(entries)
    while True:
        for i, x in enumerate(w):
            if x >= 1:
                continue
            if len(w) == 1:
                # extend with -Id = M(1,1,1) so the entry gets neighbors
                w = [1, 1, 1] + w
            elif i > 0:
                w[i - 1:i + 1] = [w[i - 1] + 1, 1, x + 1]
            else:
                w[i:i + 2] = [x + 1, 1, w[i + 1] + 1]
            break
        else:
            return w


def _linear_reduce(entries: list[int]) -> Word:
    """Drive a positive word to its reduced form by the linear inverse
    surgeries (product preserved up to sign)."""
    w = list(entries)
    while True:
        n = len(w)
        changed = False
        for i in range(1, n - 1):
            if w[i] == 1 and w[i - 1] > 1 and w[i + 1] > 1:
                w[i - 1:i + 2] = [w[i - 1] - 1, w[i + 1] - 1]
                changed = True
                break
        if changed:
            continue
        for i in range(1, n - 2):
            if w[i] == 1 and w[i + 1] == 1:
                w[i - 1:i + 3] = [w[i - 1] + w[i + 2] - 1]
                changed = True
                break
        if not changed:
            return tuple(w)


def reduced_decomposition(a) -> Word:
    """The unique reduced positive word w with word_product(w) == +-a."""
    m = _as_matrix(a)
    if m.det() != 1:
        raise ValueError(f"determinant must be 1, got {m.det()}")
    if m in (IDENTITY, NEG_IDENTITY):
        return (1, 1, 1)
    word = _linear_reduce(_positify(_euclid_word(m)))
    prod = word_product(word)
    if prod != m and prod != -m:
        raise AssertionError(f"decomposition of {m} lost the product")
    if not is_reduced(word):
        raise AssertionError(f"decomposition of {m} is not reduced: {word}")
    return word


@dataclass(frozen=True)
class ElementQuiddity:
    """Reduced words of A and A^{-1} and their concatenation."""

    left: Word
    right: Word
    sign_defect: bool  # True when the combined product is -Id

    @property
    def combined(self) -> Word:
        return self.left + self.right


def element_quiddity(a) -> ElementQuiddity:
    m = _as_matrix(a)
    left = reduced_decomposition(m)
    right = reduced_decomposition(m.inverse())
    combined = left + right
    cls = solution_class(combined)
    if cls not in (SolutionClass.PROBLEM_I, SolutionClass.PROBLEM_II):
        raise AssertionError(f"combined quiddity {combined} is not a Problem I/II solution")
    return ElementQuiddity(left, right, cls is SolutionClass.PROBLEM_II)


def element_dissection(a) -> Dissection:
    return from_certificate(reduce_word(element_quiddity(a).combined))


def element_index(a) -> Fraction:
    return rotation_index(element_quiddity(a).combined)


#: Entry ceiling for exhaustive reduced-word generation.  Entries of
#: reduced words are unbounded in general; the spot checks scan all
#: words with entries up to this cap, which already separates every
#: product class they cover.
DEFAULT_ENTRY_CAP = 6


def _reduced_words(max_length: int, entry_cap: int) -> Iterator[Word]:
    def extend(prefix: list[int]):
        n = len(prefix)
        if n >= 1:
            yield tuple(prefix)
        if n == max_length:
            return
        for a in range(1, entry_cap + 1):
            # prune prefixes that already contain a forbidden fragment
            if n >= 2 and prefix[-1] == 1 and prefix[-2] > 1 and a > 1:
                continue
            if n >= 3 and prefix[-1] == 1 and prefix[-2] == 1:
                continue
            prefix.append(a)
            yield from extend(prefix)
            prefix.pop()

    for w in extend([]):
        if is_reduced(w):
            yield w


def uniqueness_spot_check(max_length: int, entry_cap: int = DEFAULT_ENTRY_CAP) -> bool:
    """True iff no two distinct reduced words of length <= max_length
    (entries <= entry_cap) have the same product up to sign."""
    if max_length > 10:
        raise limits.BudgetExceededError("spot check is limited to length 10")
    seen: dict[Mat2, Word] = {}
    for w in _reduced_words(max_length, entry_cap):
        key = _canonical_sign(word_product(w))
        other = seen.setdefault(key, w)
        if other != w:
            return False
    return True


def conjecture_probe(word_length_bound: int, budget: Optional[int] = None) -> list[dict]:
    """Experimental report: for every group element whose combined
    quiddity has length <= the bound, how many dissections carry that
    quiddity.  Reports, never asserts.

    The elements are found by splitting every Problem I/II solution of
    length <= the bound into two reduced halves: the combined quiddity
    of an element is exactly such a split, with A the product of the
    first half.
    """
    limits.check_budget(word_length_bound, limits.DEFAULT_DISSECTION_CEILING,
                        budget, "conjecture probe")
    from .dissection import iter_dissections, quiddity as dq
    from .search import generative_enumerate

    counts_by_n: dict[int, dict[Word, int]] = {}

    def quiddity_count(word: Word) -> int:
        n = len(word)
        if n not in counts_by_n:
            table: dict[Word, int] = {}
            for d in iter_dissections(n, budget=budget):
                q = dq(d)
                table[q] = table.get(q, 0) + 1
            counts_by_n[n] = table
        return counts_by_n[n].get(word, 0)

    reports = []
    done = set()
    for n in range(3, word_length_bound + 1):
        for problem in ("I", "II"):
            for u in generative_enumerate(problem, n, budget=word_length_bound).words:
                for k in range(1, n):
                    left, right = u[:k], u[k:]
                    if not (is_reduced(left) and is_reduced(right)):
                        continue
                    m = _canonical_sign(word_product(left))
                    if m in done:
                        continue
                    done.add(m)
                    reports.append({
                        "element": m.rows(),
                        "reduced": list(left),
                        "quiddity": list(u),
                        "index_twice": int(rotation_index(u) * 2),
                        "dissections_found": quiddity_count(u),
                    })
    reports.sort(key=lambda r: (len(r["quiddity"]), r["quiddity"], r["element"]))
    return reports
