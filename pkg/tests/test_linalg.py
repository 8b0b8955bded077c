"""Exact linear algebra over small finite fields."""

from __future__ import annotations

import random

import pytest

from hyperseq import linalg
from hyperseq.fields import field


def test_rref_and_rank():
    F = field(2)
    mat = ((1, 0, 1, 0), (0, 1, 1, 1))
    red, pivots = linalg.rref(F, mat)
    assert pivots == (0, 1)
    assert linalg.rank(F, mat) == 2


def test_kernel_annihilates_rows():
    F = field(2)
    mat = ((1, 0, 1, 0), (0, 1, 1, 1))
    basis = linalg.kernel_basis(F, mat)
    assert len(basis) == 2  # 4 columns - rank 2
    for vec in basis:
        assert all(
            linalg.mat_vec(F, mat, vec)[r] == 0 for r in range(len(mat))
        )
    assert (1, 1, 1, 0) in set(
        linalg.vec_mat(F, combo, basis)
        for combo in [(1, 0), (0, 1), (1, 1)]
    )


def test_full_rank_matrix_has_trivial_kernel():
    F = field(3)
    assert linalg.kernel_basis(F, linalg.identity(3)) == ()


@pytest.mark.parametrize("q", [2, 3, 4])
def test_kernel_rank_complementarity_random(q):
    F = field(q)
    rng = random.Random(40 + q)
    for _ in range(60):
        rows, cols = rng.randrange(1, 5), rng.randrange(1, 6)
        mat = tuple(
            tuple(rng.randrange(q) for _ in range(cols)) for _ in range(rows)
        )
        r = linalg.rank(F, mat)
        basis = linalg.kernel_basis(F, mat)
        assert r + len(basis) == cols
        for vec in basis:
            assert all(x == 0 for x in linalg.mat_vec(F, mat, vec))


def test_solve_particular_solution():
    F = field(2)
    mat = ((1, 1), (0, 1))
    sol = linalg.solve(F, mat, (0, 1))
    assert sol is not None
    assert linalg.mat_vec(F, mat, sol) == (0, 1)
    # inconsistent system
    assert linalg.solve(F, ((1, 1), (1, 1)), (0, 1)) is None


def test_inverse():
    F = field(3)
    mat = ((1, 2), (0, 1))
    inv = linalg.inverse(F, mat)
    assert linalg.mat_mul(F, mat, inv) == linalg.identity(2)
    with pytest.raises(ValueError):
        linalg.inverse(F, ((1, 2), (2, 1)))  # det = 1-4 = 0 (mod 3)


@pytest.mark.parametrize("q", [2, 3])
def test_inverse_random_round_trip(q):
    F = field(q)
    rng = random.Random(7 * q)
    found = 0
    while found < 20:
        n = rng.randrange(1, 5)
        mat = tuple(tuple(rng.randrange(q) for _ in range(n)) for _ in range(n))
        if not linalg.is_nonsingular(F, mat):
            continue
        inv = linalg.inverse(F, mat)
        assert linalg.mat_mul(F, inv, mat) == linalg.identity(n)
        found += 1


def test_transpose_hstack_shapes():
    a = ((1, 2), (3, 4), (5, 6))
    assert linalg.transpose(a) == ((1, 3, 5), (2, 4, 6))
    assert linalg.hstack([((1,), (2,)), ((3, 4), (5, 6))]) == ((1, 3, 4), (2, 5, 6))
    assert linalg.zeros(2, 3) == ((0, 0, 0), (0, 0, 0))


def test_mat_vec_and_vec_mat():
    F = field(2)
    mat = ((1, 1), (0, 1))
    assert linalg.mat_vec(F, mat, (1, 1)) == (0, 1)
    assert linalg.vec_mat(F, (1, 1), mat) == (1, 0)
