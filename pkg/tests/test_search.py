import pytest

from quiddity.frieze import is_totally_positive
from quiddity.limits import BudgetExceededError
from quiddity.search import (
    SolutionClass,
    brute_force_enumerate,
    count_table,
    entry_bound,
    generative_enumerate,
    orbit_count,
    sum_bound,
)


def test_bounds():
    assert entry_bound(SolutionClass.PROBLEM_I, 7) == 2
    assert entry_bound(SolutionClass.PROBLEM_II, 7) == 5
    assert entry_bound(SolutionClass.PROBLEM_III, 7) == 7
    assert sum_bound(SolutionClass.PROBLEM_I, 7) == 15
    assert sum_bound(SolutionClass.PROBLEM_III, 7) == 18


def test_problem_i_counts():
    assert [len(generative_enumerate("I", n)) for n in range(3, 9)] == [0, 0, 0, 1, 7, 34]


def test_problem_ii_counts():
    catalan = [1, 2, 5, 14, 42, 132]
    assert [len(generative_enumerate("II", n)) for n in range(3, 9)] == catalan
    assert len(generative_enumerate("II", 9)) == 430
    assert len(generative_enumerate("II", 10)) == 1445


def test_problem_iii_counts():
    assert [len(generative_enumerate("III", n)) for n in range(2, 7)] == [2, 6, 20, 75, 290]


def test_problem_iii_totally_positive_counts():
    got = []
    for n in range(2, 7):
        s = generative_enumerate("III", n)
        got.append(sum(1 for w in s.words if is_totally_positive(w)))
    assert got == [2, 6, 20, 70, 252]


def test_oracle_equivalence():
    for problem in ("I", "II", "III"):
        start = 2 if problem == "III" else 3
        for n in range(start, 9):
            brute = brute_force_enumerate(problem, n)
            gen = generative_enumerate(problem, n)
            assert brute.words == gen.words, (problem, n)


def test_sum_prune_misses_nothing():
    for problem in ("I", "II", "III"):
        for n in range(3, 7):
            pruned = brute_force_enumerate(problem, n, sum_prune=True)
            full = brute_force_enumerate(problem, n, sum_prune=False)
            assert pruned.words == full.words


def test_orbit_counts():
    s = generative_enumerate("I", 7)
    assert orbit_count(s, "rotation") == 1
    assert orbit_count(s, "dihedral") == 1
    # the 38 non-TP trace-zero words at n=6 fall into 4 dihedral classes
    s6 = generative_enumerate("III", 6)
    non_tp = [w for w in s6.words if not is_totally_positive(w)]
    assert len(non_tp) == 38
    reps = set()
    for w in non_tp:
        images = [w[k:] + w[:k] for k in range(6)]
        rev = w[::-1]
        images += [rev[k:] + rev[:k] for k in range(6)]
        reps.add(min(images))
    assert len(reps) == 4
    assert (1, 1, 1, 1, 2, 3) in reps


def test_orbit_count_rejects_bad_symmetry():
    with pytest.raises(ValueError):
        orbit_count(generative_enumerate("II", 4), "mirror")


def test_count_table_cross_checked():
    table = count_table("II", 7, cross_check_up_to=7)
    assert table == [(3, 1), (4, 2), (5, 5), (6, 14), (7, 42)]


def test_budget_guard():
    with pytest.raises(BudgetExceededError):
        brute_force_enumerate("II", 13)
    with pytest.raises(BudgetExceededError):
        generative_enumerate("II", 15)
    # explicit budget raises the ceiling
    assert len(brute_force_enumerate("I", 6, budget=13)) == 1
