import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import Q, R, Z2, qm, zm
from gjlinalg import (
    Matrix,
    ShapeError,
    basis_col_space,
    basis_left_null_space,
    basis_null_space,
    basis_row_space,
    det,
    fundamental_subspaces,
    identity,
    inverse,
    is_linearly_independent,
    mat_mul,
    mat_vec_mul,
    nullity,
    rank,
    transpose,
    zero,
)
from gjlinalg.matrix import stack_rows, vec_mat_mul
from oracles import adjugate_inverse, cofactor_det, minor_rank, random_rows, small_rat


def _rows(basis):
    return [list(v.entries) for v in basis]


def test_rank_nullity_examples():
    assert rank(identity(Q, 4)) == 4
    assert rank(zero(Q, 2, 3)) == 0
    assert nullity(identity(Q, 4)) == 0
    assert nullity(zero(Q, 2, 3)) == 3
    A = qm([[1, 2], [2, 4]])
    # Oracle: the only 2x2 minor is 0 and some 1x1 minor is not.
    assert minor_rank(Q, A.tolist()) == 1
    assert rank(A) == 1
    assert nullity(A) == 1


def test_det_examples():
    assert det(identity(Q, 5)) == 1
    assert det(qm([[1, 2], [3, 4]])) == -2
    assert det(zm([[1, 1], [1, 1]])) == 0
    assert det(qm([[0, 1, 0], [1, 0, 0], [0, 0, 1]])) == -1
    with pytest.raises(ShapeError):
        det(qm([[1, 2, 3]]))


def test_inverse_examples():
    assert inverse(identity(Q, 3)) == identity(Q, 3)
    assert inverse(qm([[2, 0], [0, 4]])) == qm([["1/2", 0], [0, "1/4"]])
    assert inverse(qm([[1, 2], [3, 4]])) == qm([[-2, 1], ["3/2", "-1/2"]])
    assert inverse(qm([[1, 2], [2, 4]])) is None
    with pytest.raises(ShapeError):
        inverse(qm([[1, 2]]))


def test_basis_examples():
    assert _rows(basis_row_space(identity(Q, 3))) == identity(Q, 3).tolist()
    assert len(basis_row_space(zero(Q, 2, 2))) == 0
    assert _rows(basis_row_space(qm([[1, 2], [2, 4]]))) == [[1, 2]]
    assert _rows(basis_col_space(identity(Q, 3))) == identity(Q, 3).tolist()
    assert _rows(basis_col_space(qm([[1, 2], [2, 4]]))) == [[1, 2]]

    assert len(basis_null_space(identity(Q, 3))) == 0
    full = basis_null_space(zero(Q, 2, 3))
    assert len(full) == 3 and rank(full.as_matrix()) == 3
    (v,) = basis_null_space(qm([[1, 1]]))
    assert v[0] + v[1] == 0 and not v.is_zero()

    assert len(basis_left_null_space(identity(Q, 3))) == 0
    assert len(basis_left_null_space(zero(Q, 4, 2))) == 4
    (w,) = basis_left_null_space(qm([[1], [1]]))
    assert w[0] + w[1] == 0 and not w.is_zero()


def test_basis_metadata():
    b = basis_null_space(qm([[1, 1, 1]]))
    assert b.ambient_dim == 3 and not b.approximate
    assert basis_col_space(qm([[1, 1, 1]])).ambient_dim == 1
    assert basis_row_space(Matrix.from_rows(R, [[1.0, 2.0]])).approximate


def _random_q(seed, m, n):
    return Matrix.from_rows(Q, small_rat(Q, random.Random(seed), m, n, density=0.6))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10**9))
def test_rank_matches_minor_oracle(m, n, seed):
    A = _random_q(seed, m, n)
    assert rank(A) == minor_rank(Q, A.tolist())


@pytest.mark.parametrize("fname", ["rat", "gf2", "real"])
@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.integers(1, 7), st.integers(0, 10**9))
def test_rank_nullity(fname, m, n, seed):
    F = {"rat": Q, "gf2": Z2, "real": R}[fname]
    A = Matrix.from_rows(F, random_rows(F, random.Random(seed), m, n, density=0.6))
    assert rank(A) + nullity(A) == n


def test_det_exhaustive_gf2_up_to_3():
    for n in (1, 2, 3):
        for bits in itertools.product((0, 1), repeat=n * n):
            rows = [list(bits[i * n:(i + 1) * n]) for i in range(n)]
            assert det(zm(rows)) == cofactor_det(Z2, rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**9))
def test_det_matches_cofactor_oracle(n, seed):
    A = _random_q(seed, n, n)
    assert det(A) == cofactor_det(Q, A.tolist())


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 5), st.integers(0, 10**9))
def test_det_gf2_random_4_5(n, seed):
    A = Matrix.from_rows(Z2, random_rows(Z2, random.Random(seed), n, n))
    assert det(A) == cofactor_det(Z2, A.tolist())


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 8), st.integers(0, 10**9))
def test_det_multiplicative_and_transpose(n, seed):
    A, B = _random_q(seed, n, n), _random_q(seed + 1, n, n)
    assert det(mat_mul(A, B)) == det(A) * det(B)
    assert det(transpose(A)) == det(A)


@pytest.mark.parametrize("fname", ["rat", "gf2"])
@settings(max_examples=50, deadline=None)
@given(n=st.integers(1, 5), seed=st.integers(0, 10**9))
def test_inverse_sound(fname, n, seed):
    F = Q if fname == "rat" else Z2
    rows = small_rat(Q, random.Random(seed), n, n, density=0.7) if F is Q else \
        random_rows(Z2, random.Random(seed), n, n)
    A = Matrix.from_rows(F, rows)
    B = inverse(A)
    expected = adjugate_inverse(F, A.tolist())
    if expected is None:
        assert B is None
    else:
        assert B == Matrix.from_rows(F, expected)
        assert mat_mul(A, B) == identity(F, n) == mat_mul(B, A)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.integers(1, 6), st.integers(0, 10**9))
def test_fundamental_subspaces(m, n, seed):
    A = _random_q(seed, m, n)
    r = rank(A)
    b = fundamental_subspaces(A)
    assert len(b.row) == len(b.col) == r
    assert len(b.null) == n - r
    assert len(b.left_null) == m - r
    for v in b.null:
        assert mat_vec_mul(A, v).is_zero()
    for v in b.left_null:
        assert vec_mat_mul(v, A).is_zero()
    for basis in (b.row, b.col, b.null, b.left_null):
        assert is_linearly_independent(Q, basis)
    if r:
        # Rows of A stay in the row space; columns of A stay in the column space.
        assert rank(stack_rows(Q, [v.entries for v in b.row] + A.rows())) == r
        assert rank(stack_rows(Q, [v.entries for v in b.col] + transpose(A).rows())) == r


def test_approximate_bases_residuals():
    rng = random.Random(3)
    for _ in range(20):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        A = Matrix.from_rows(R, [[rng.uniform(-1, 1) for _ in range(n)] for _ in range(m)])
        b = fundamental_subspaces(A)
        for v in b.null:
            assert max(abs(x) for x in mat_vec_mul(A, v)) <= 1e-8
        for v in b.left_null:
            assert max(abs(x) for x in vec_mat_mul(v, A)) <= 1e-8


def test_determinism():
    A = _random_q(11, 6, 6)
    first = (det(A), inverse(A), fundamental_subspaces(A))
    for _ in range(3):
        assert (det(A), inverse(A), fundamental_subspaces(A)) == first
