import random

import pytest

from quiddity.matrices import (
    IDENTITY,
    Mat2,
    MatrixClass,
    NEG_IDENTITY,
    canonical_rotation,
    check_word,
    classify_matrix,
    continuant,
    elementary,
    product_from_continuants,
    rotate,
    rotundus,
    word_product,
)


def test_mat2_basics():
    m = Mat2(1, 2, 3, 7)
    assert m.det() == 1
    assert m.trace() == 8
    assert m * m.inverse() == IDENTITY
    assert (-m).rows() == [[-1, -2], [-3, -7]]


def test_elementary():
    assert elementary(3) == Mat2(3, -1, 1, 0)
    assert elementary(0).det() == 1


def test_word_product_order():
    # leftmost factor comes from the last entry of the word
    w = (2, 5)
    assert word_product(w) == elementary(5) * elementary(2)


def test_word_product_concatenation():
    u, v = (1, 4, 2), (3, 1)
    assert word_product(u + v) == word_product(v) * word_product(u)


def test_known_products():
    assert word_product((1, 1, 1)) == NEG_IDENTITY
    assert word_product((1, 1, 2, 1, 1)) == -Mat2(0, -1, 1, 0)
    assert word_product((1,) * 6) == IDENTITY


def test_rotundus_small():
    # closed forms for short words
    a, b = 4, 7
    assert rotundus((a,)) == a
    assert rotundus((a, b)) == a * b - 2
    assert rotundus((1, 1, 1)) == -2


def test_continuant_recurrence():
    assert continuant(()) == 1
    assert continuant((5,)) == 5
    assert continuant((1, 2, 2)) == continuant((1, 2)) * 2 - continuant((1,))
    assert continuant((1, 1, 1)) == -1


def test_product_from_continuants_random():
    rng = random.Random(7)
    for _ in range(10_000):
        n = rng.randint(2, 8)
        w = tuple(rng.randint(1, 9) for _ in range(n))
        assert product_from_continuants(w) == word_product(w)


def test_rotation_helpers():
    w = (3, 1, 2)
    assert rotate(w, 1) == (1, 2, 3)
    assert canonical_rotation((2, 1, 3)) == (1, 3, 2)


def test_classify_matrix():
    assert classify_matrix(IDENTITY) is MatrixClass.IDENTITY
    assert classify_matrix(NEG_IDENTITY) is MatrixClass.NEG_IDENTITY
    assert classify_matrix(Mat2(0, -1, 1, 0)) is MatrixClass.TRACE_ZERO
    assert classify_matrix(Mat2(2, 1, 1, 1)) is MatrixClass.OTHER
    with pytest.raises(ValueError):
        classify_matrix(Mat2(1, 0, 0, 2))


def test_check_word_rejects():
    with pytest.raises(ValueError):
        check_word(())
    with pytest.raises(ValueError):
        check_word((1, 0, 2))
    with pytest.raises(ValueError):
        check_word((1, -3))
