import random

import pytest

from fqchol.census import cone_array
from fqchol.cholesky import psi
from fqchol.cones import all_patterns, anchor_diag, in_lpm, sign_pattern_lpm
from fqchol.errors import NonDefiniteField, PatternMismatch, SizeMismatch
from fqchol.gf import field_new
from fqchol.groups import (
    TriGroupLaw,
    box,
    box_inverse,
    check_group,
    circledast,
    cholesky_coords,
    lower_pos_tri_all,
    tri_inv,
    tri_op,
)
from fqchol.matfq import Matrix, SymMatrix, frobenius_matrix

from .conftest import M, S
from .helpers import random_lower_pos, random_sym

LAWS = list(TriGroupLaw)


def _cone(F, n, eps=None):
    return [S(F, m.tolist()) for m in cone_array(F, n, eps)]


def test_tri_op_examples(F3, F7):
    assert tri_op(TriGroupLaw.CHOLADD, M(F3, [[1, 0], [1, 1]]), M(F3, [[1, 0], [2, 1]])) == Matrix.identity(F3, 2)
    assert tri_op(TriGroupLaw.PROD, M(F7, [[2, 0], [0, 4]]), M(F7, [[4, 0], [0, 2]])) == Matrix.identity(F7, 2)
    K = M(F7, [[2, 0], [5, 4]])
    for law in LAWS:
        assert tri_op(law, Matrix.identity(F7, 2), K) == K
        assert tri_inv(law, Matrix.identity(F7, 2)) == Matrix.identity(F7, 2)


def test_tri_inv_examples(F3, F7):
    assert tri_inv(TriGroupLaw.CHOLADD, M(F3, [[1, 0], [1, 1]])) == M(F3, [[1, 0], [2, 1]])
    assert tri_inv(TriGroupLaw.PROD, M(F7, [[2, 0], [0, 4]])) == M(F7, [[4, 0], [0, 2]])


def test_tri_op_size_mismatch(F7):
    with pytest.raises(SizeMismatch):
        tri_op(TriGroupLaw.PROD, Matrix.identity(F7, 2), Matrix.identity(F7, 3))


@pytest.mark.parametrize("p", [3, 7])
@pytest.mark.parametrize("law", LAWS, ids=lambda law: law.value)
def test_factor_group_axioms(p, law):
    F = field_new(p)
    els = list(lower_pos_tri_all(F, 2))
    assert len(els) == len(F.squares()) ** 2 * p
    g = check_group(els, lambda a, b: tri_op(law, a, b), Matrix.identity(F, 2), lambda a: tri_inv(law, a))
    assert g.is_group
    assert g.abelian == (law is TriGroupLaw.CHOLADD or p == 3)


def test_factor_group_random_n3(F7):
    rng = random.Random(3)
    for law in LAWS:
        for _ in range(100):
            a, b, c = (random_lower_pos(F7, 3, rng) for _ in range(3))
            op = lambda x, y: tri_op(law, x, y)  # noqa: E731
            assert op(op(a, b), c) == op(a, op(b, c))
            assert op(a, tri_inv(law, a)) == Matrix.identity(F7, 3)


def test_box_identity_and_inverse(F7):
    rng = random.Random(0)
    I = SymMatrix.identity(F7, 2)
    for _ in range(30):
        A = random_sym(F7, 2, rng)
        if not in_lpm(A):
            continue
        for law in LAWS:
            assert box(law, A, I) == A == box(law, I, A)
            assert box(law, A, box_inverse(law, A)) == I


def test_box_of_anchors_is_identity(F7):
    D = anchor_diag(F7, (1, -1))
    assert box(TriGroupLaw.PROD, D, D) == SymMatrix.identity(F7, 2)


@pytest.mark.parametrize("law", LAWS, ids=lambda law: law.value)
def test_box_group_f3(F3, law):
    els = _cone(F3, 2)
    assert len(els) == 12
    g = check_group(els, lambda a, b: box(law, a, b), SymMatrix.identity(F3, 2), lambda a: box_inverse(law, a))
    assert g.is_group and g.abelian


def test_box_square_is_positive(F3, F7):
    for F in (F3, F7):
        for A in _cone(F, 2):
            for law in LAWS:
                assert sign_pattern_lpm(box(law, A, A)) == (1, 1)


def test_box_pattern_multiplies(F7):
    rng = random.Random(8)
    for _ in range(50):
        A, B = random_sym(F7, 3, rng), random_sym(F7, 3, rng)
        if in_lpm(A) and in_lpm(B):
            want = tuple(a * b for a, b in zip(sign_pattern_lpm(A), sign_pattern_lpm(B)))
            assert sign_pattern_lpm(box(TriGroupLaw.PROD, A, B)) == want


@pytest.mark.parametrize("law", LAWS, ids=lambda law: law.value)
def test_circledast_cones_are_groups(F7, law):
    for eps in all_patterns(2):
        els = _cone(F7, 2, eps)
        assert len(els) == 63
        D = anchor_diag(F7, eps)
        g = check_group(els, lambda a, b: circledast(law, a, b), D)
        assert g.is_group
        assert g.abelian == (law is TriGroupLaw.CHOLADD)
        if not g.abelian:
            a, b = g.noncommuting
            assert circledast(law, a, b) != circledast(law, b, a)


def test_circledast_anchor_is_identity(F7):
    for B in _cone(F7, 2, (-1, 1))[:20]:
        for law in LAWS:
            assert circledast(law, anchor_diag(F7, (-1, 1)), B) == B


def test_circledast_needs_one_cone(F7):
    with pytest.raises(PatternMismatch):
        circledast(TriGroupLaw.PROD, anchor_diag(F7, (1, 1)), anchor_diag(F7, (1, -1)))


def test_circledast_associative_random_n3(F7):
    rng = random.Random(12)
    eps = (1, -1, -1)
    D = anchor_diag(F7, eps)
    for law in LAWS:
        for _ in range(40):
            a, b, c = (psi(D, random_lower_pos(F7, 3, rng)) for _ in range(3))
            op = lambda x, y: circledast(law, x, y)  # noqa: E731
            assert op(op(a, b), c) == op(a, op(b, c))


def test_nondefinite_refused(F5):
    with pytest.raises(NonDefiniteField):
        cholesky_coords(SymMatrix.identity(F5, 2))


def test_frobenius_homomorphism_f27(F27):
    rng = random.Random(27)
    done = 0
    while done < 40:
        A, B = random_sym(F27, 2, rng), random_sym(F27, 2, rng)
        if not (in_lpm(A) and in_lpm(B)):
            continue
        for law in LAWS:
            fa, fb = SymMatrix.of(frobenius_matrix(A)), SymMatrix.of(frobenius_matrix(B))
            assert frobenius_matrix(box(law, A, B)) == box(law, fa, fb)
        done += 1
