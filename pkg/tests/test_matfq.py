import random
from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fqchol.errors import IndexOutOfRange, NotSymmetric, ParseError, Singular, SizeMismatch
from fqchol.gf import field_new
from fqchol.matfq import (
    Matrix,
    SymMatrix,
    batch_det,
    batch_leading_minors,
    batch_trailing_minors,
    format_matrix,
    frobenius_matrix,
    parse_matrix,
    reverse,
)

from .conftest import M, S
from .helpers import all_sym, leibniz_det, random_sym


def test_det_example(F7):
    assert S(F7, [[2, 1], [1, 3]]).det() == 5


def test_singular_det_and_inverse(F3):
    A = S(F3, [[1, 1], [1, 1]])
    assert A.det() == 0
    with pytest.raises(Singular):
        A.inverse()


def test_inverse_example(F7):
    A = S(F7, [[2, 1], [1, 3]])
    assert A.inverse() == S(F7, [[2, 4], [4, 6]])
    assert A @ A.inverse() == Matrix.identity(F7, 2)


def test_minor_indices_are_zero_based(F7):
    A = M(F7, [[1, 2, 3], [4, 5, 6], [0, 1, 1]])
    assert A.minor([0, 2], [1, 2]) == F7.sub(F7.mul(2, 1), F7.mul(3, 1))
    assert A.leading_minor(1) == 1
    assert A.trailing_minor(1) == 1
    with pytest.raises(IndexOutOfRange):
        A.minor([0, 3], [0, 1])
    with pytest.raises(IndexOutOfRange):
        A.leading_minor(0)
    with pytest.raises(SizeMismatch):
        A.minor([0, 1], [0])


def test_symmetric_check(F3):
    with pytest.raises(NotSymmetric):
        S(F3, [[1, 2], [0, 1]])


def test_sym_equals_plain_matrix(F3):
    assert S(F3, [[1, 2], [2, 1]]) == M(F3, [[1, 2], [2, 1]])
    assert len({S(F3, [[1, 2], [2, 1]]), M(F3, [[1, 2], [2, 1]])}) == 1


@pytest.mark.parametrize("p,k,n", [(3, 1, 2), (2, 2, 2), (3, 1, 3), (2, 1, 3)])
def test_det_matches_leibniz_exhaustive(p, k, n):
    F = field_new(p, k)
    for A in all_sym(F, n):
        assert A.det() == leibniz_det(F, A.rows)


@pytest.mark.parametrize("p,k", [(7, 1), (3, 2), (3, 3), (2, 4)])
def test_det_and_batch_det_match_leibniz_random(p, k):
    F = field_new(p, k)
    rng = random.Random(p * 100 + k)
    mats = []
    for _ in range(200):
        n = rng.randint(1, 4)
        rows = [[rng.randrange(F.q) for _ in range(n)] for _ in range(n)]
        A = M(F, rows)
        d = leibniz_det(F, rows)
        assert A.det() == d
        assert int(batch_det(F, np.array([rows]))[0]) == d
        mats.append(A)
    for A in mats:
        lm = A.leading_minors()
        assert lm == [leibniz_det(F, [r[:j] for r in A.rows[:j]]) for j in range(1, A.n + 1)]


def test_batch_minors_match_scalar(F9):
    rng = random.Random(1)
    mats = [random_sym(F9, 3, rng) for _ in range(100)]
    arr = np.array([m.rows for m in mats])
    lead = batch_leading_minors(F9, arr)
    trail = batch_trailing_minors(F9, arr)
    for m, lo, tr in zip(mats, lead, trail):
        assert list(lo) == m.leading_minors()
        assert list(tr) == m.trailing_minors()


def test_leading_minors_fallback_after_zero_pivot(F7):
    A = S(F7, [[0, 1, 0], [1, 0, 0], [0, 0, 3]])
    assert A.leading_minors() == [0, 6, 4]


def test_inverse_round_trip(small_field):
    F = small_field
    rng = random.Random(F.q)
    for _ in range(60):
        A = random_sym(F, 3, rng)
        if A.det() == 0:
            continue
        B = A.inverse()
        assert isinstance(B, SymMatrix)
        assert A @ B == Matrix.identity(F, 3)
        assert B.inverse() == A
        assert F.mul(A.det(), B.det()) == 1


def _jacobi_holds(A: Matrix) -> bool:
    F = A.field
    n = A.n
    B = A.inverse()
    d = A.det()
    for size in range(1, n):
        for I, J in product(combinations(range(n), size), repeat=2):
            Ic = [i for i in range(n) if i not in I]
            Jc = [j for j in range(n) if j not in J]
            rhs = F.div(A.minor(Jc, Ic), d)
            if (sum(I) + sum(J)) % 2:
                rhs = F.neg(rhs)
            if B.minor(I, J) != rhs:
                return False
    return True


def test_jacobi_complementary_minors(F5):
    rng = random.Random(5)
    checked = 0
    while checked < 40:
        A = random_sym(F5, 3, rng)
        if A.det():
            assert _jacobi_holds(A)
            checked += 1



def test_cauchy_binet(F7):
    rng = random.Random(7)
    for _ in range(30):
        A = M(F7, [[rng.randrange(7) for _ in range(3)] for _ in range(2)])
        B = M(F7, [[rng.randrange(7) for _ in range(2)] for _ in range(3)])
        total = 0
        for cols in combinations(range(3), 2):
            total = F7.add(total, F7.mul(A.minor([0, 1], cols), B.minor(cols, [0, 1])))
        assert (A @ B).det() == total


@settings(max_examples=60)
@given(st.lists(st.integers(0, 26), min_size=9, max_size=9), st.lists(st.integers(0, 26), min_size=9, max_size=9))
def test_det_multiplicative_f27(xs, ys):
    F = field_new(3, 3)
    A = M(F, [xs[0:3], xs[3:6], xs[6:9]])
    B = M(F, [ys[0:3], ys[3:6], ys[6:9]])
    assert (A @ B).det() == F.mul(A.det(), B.det())
    assert A.T.det() == A.det()


def test_reverse_swaps_leading_and_trailing(F9):
    rng = random.Random(9)
    for _ in range(40):
        A = random_sym(F9, 3, rng)
        R = reverse(A)
        assert R.leading_minors() == A.trailing_minors()
        assert reverse(R) == A


def test_frobenius_matrix_is_multiplicative(F9):
    rng = random.Random(3)
    for _ in range(40):
        A, B = random_sym(F9, 3, rng), random_sym(F9, 3, rng)
        assert frobenius_matrix(A @ B) == frobenius_matrix(A) @ frobenius_matrix(B)
        assert frobenius_matrix(A).det() == F9.frobenius(A.det(), 1)


def test_text_round_trip(F9, F7):
    for A in (S(F9, [[1, 5], [5, 8]]), S(F7, [[2, 1], [1, 3]])):
        assert parse_matrix(format_matrix(A)) == A
    assert format_matrix(S(F9, [[1, 5], [5, 8]])) == "3 2 2\n1 0 1\n1 5\n5 8\n"


@pytest.mark.parametrize(
    "text",
    ["", "7 1\n1\n", "7 1 2\n1 2\n2\n", "7 1 1\n9\n", "x y z\n", "3 2 1\n1 0 1\n9\n"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_parse_nonsymmetric_flag(F7):
    text = "7 1 2\n1 2\n3 4\n"
    with pytest.raises(NotSymmetric):
        parse_matrix(text)
    assert parse_matrix(text, symmetric=False) == M(F7, [[1, 2], [3, 4]])
