"""Two independent enumerators for the word equations.

``brute_force_enumerate`` walks all tuples below the proved entry bound
and keeps those whose matrix lands on the target.  It prunes on the
running entry sum (every solution satisfies sum <= 3n-6, respectively
3n-3 for the trace-zero problem); the pruning is validated against the
unpruned search in the test suite for small n.

``generative_enumerate`` grows the base solutions by the two surgeries
and collects everything of the requested length.  The two enumerators
must agree; that cross-check is the library's strongest self-test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import limits
from .matrices import (
    IDENTITY,
    Mat2,
    NEG_IDENTITY,
    Word,
    canonical_rotation,
    elementary,
)
from .surgery import (
    BASES_CENTRAL,
    BASE_TRIANGLE,
    SolutionClass,
    apply_type1,
    apply_type2,
    solution_class,
)


@dataclass(frozen=True)
class SolutionSet:
    """All solutions of one problem at one length, as ordered tuples.

    Rotations of a solution are distinct members, matching the counting
    convention of the source lists (e.g. 7 solutions at I, n=7).
    """

    problem: SolutionClass
    n: int
    words: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.words)


def _as_problem(problem: SolutionClass | str) -> SolutionClass:
    if isinstance(problem, SolutionClass):
        if problem is SolutionClass.NOT_A_SOLUTION:
            raise ValueError("pick one of the problems I, II, III")
        return problem
    return SolutionClass(str(problem).upper().lstrip("PROBLEM_"))


def entry_bound(problem: SolutionClass, n: int) -> int:
    """Largest value any entry of a length-n solution can take."""
    if problem is SolutionClass.PROBLEM_I:
        return n - 5
    if problem is SolutionClass.PROBLEM_II:
        return n - 2
    return n


def sum_bound(problem: SolutionClass, n: int) -> int:
    """Largest possible entry sum of a length-n solution."""
    return 3 * n - 3 if problem is SolutionClass.PROBLEM_III else 3 * n - 6


def _matches(problem: SolutionClass, m: Mat2) -> bool:
    if problem is SolutionClass.PROBLEM_I:
        return m == IDENTITY
    if problem is SolutionClass.PROBLEM_II:
        return m == NEG_IDENTITY
    return m.trace() == 0


def brute_force_enumerate(
    problem: SolutionClass | str,
    n: int,
    budget: int | None = None,
    sum_prune: bool = True,
) -> SolutionSet:
    """Exhaustive DFS over all candidate tuples of length n.

    ``sum_prune=False`` disables the entry-sum cutoff; the tests use it
    to certify that the pruned search misses nothing.
    """
    problem = _as_problem(problem)
    limits.check_budget(n, limits.DEFAULT_BRUTE_FORCE_CEILING, budget, "brute-force search")
    if n < 1:
        raise ValueError("length must be >= 1")
    bound = entry_bound(problem, n)
    smax = sum_bound(problem, n)
    found: list[Word] = []
    if bound < 1:
        return SolutionSet(problem, n, ())

    def extend(prefix: list[int], product: Mat2, total: int) -> None:
        depth = len(prefix)
        if depth == n:
            if _matches(problem, product):
                found.append(tuple(prefix))
            return
        remaining = n - depth - 1
        for a in range(1, bound + 1):
            if sum_prune and total + a + remaining > smax:
                break
            prefix.append(a)
            extend(prefix, elementary(a) * product, total + a)
            prefix.pop()

    for a in range(1, bound + 1):
        if sum_prune and a + n - 1 > smax:
            break
        extend([a], elementary(a), a)
    return SolutionSet(problem, n, tuple(found))


def _all_surgeries(word: Word) -> Iterable[tuple[Word, int]]:
    """Children of all rotations of a word, canonicalized, with the
    length jump.  Working modulo rotation keeps the closure small; the
    full rotation orbits are restored when a level is read out."""
    n = len(word)
    for k in range(n):
        w = word[k:] + word[:k]
        for i in range(n):
            yield canonical_rotation(apply_type1(w, i)), 1
        for i in range(n):
            for a1 in range(1, w[i] + 1):
                yield canonical_rotation(apply_type2(w, i, (a1, w[i] + 1 - a1))), 3


def generative_enumerate(
    problem: SolutionClass | str, n: int, budget: int | None = None
) -> SolutionSet:
    """Closure of the base words under the surgeries, cut at length n.

    For the Id/-Id problems the parity of type-2 steps selects the
    problem (odd -> Id, even -> -Id); parity is a word invariant, which
    the closure asserts as it deduplicates.
    """
    problem = _as_problem(problem)
    limits.check_budget(n, limits.DEFAULT_GENERATIVE_CEILING, budget, "generative search")
    if n < 1:
        raise ValueError("length must be >= 1")

    if problem is SolutionClass.PROBLEM_III:
        levels: dict[int, dict[Word, int]] = {
            2: {canonical_rotation(b): 0 for b in BASES_CENTRAL}
        }
    else:
        levels = {3: {BASE_TRIANGLE: 0}}

    for length in sorted(levels) + list(range(min(levels) + 1, n + 1)):
        current = levels.get(length)
        if not current or length >= n:
            continue
        for word, parity in current.items():
            for child, jump in _all_surgeries(word):
                child_len = length + jump
                if child_len > n:
                    continue
                child_parity = parity ^ (jump == 3)
                level = levels.setdefault(child_len, {})
                known = level.get(child)
                if known is None:
                    level[child] = child_parity
                elif known != child_parity:
                    raise AssertionError(f"parity clash for {child}")

    at_n = levels.get(n, {})
    if problem is SolutionClass.PROBLEM_I:
        classes = [w for w, parity in at_n.items() if parity == 1]
    elif problem is SolutionClass.PROBLEM_II:
        classes = [w for w, parity in at_n.items() if parity == 0]
    else:
        classes = list(at_n)
    words = {w[k:] + w[:k] for w in classes for k in range(len(w))}
    return SolutionSet(problem, n, tuple(sorted(words)))


def orbit_count(s: SolutionSet, symmetry: str = "rotation") -> int:
    """Number of orbits of s.words under rotations, or rotations plus
    reflections ("dihedral")."""
    if symmetry not in ("rotation", "dihedral"):
        raise ValueError(f"unknown symmetry {symmetry!r}")
    reps = set()
    for word in s.words:
        images = [word[k:] + word[:k] for k in range(len(word))]
        if symmetry == "dihedral":
            rev = word[::-1]
            images += [rev[k:] + rev[:k] for k in range(len(rev))]
        reps.add(min(images))
    return len(reps)


def count_table(
    problem: SolutionClass | str,
    n_max: int,
    budget: int | None = None,
    cross_check_up_to: int = 0,
) -> list[tuple[int, int]]:
    """(n, solution count) for n up to n_max, from the generative search.

    Lengths up to ``cross_check_up_to`` are recomputed by brute force
    and any disagreement raises.
    """
    problem = _as_problem(problem)
    n_min = 2 if problem is SolutionClass.PROBLEM_III else 3
    table = []
    for n in range(n_min, n_max + 1):
        gen = generative_enumerate(problem, n, budget=budget)
        if n <= cross_check_up_to:
            brute = brute_force_enumerate(problem, n, budget=budget)
            if brute.words != gen.words:
                raise AssertionError(
                    f"enumerator disagreement for {problem.value}, n={n}"
                )
        table.append((n, len(gen)))
    return table
