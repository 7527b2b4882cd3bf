"""Exact linear algebra: rank, kernels, solving and quotients over Q and F_p."""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import gmpy2
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.append(str(Path(__file__).resolve().parents[1]))

from linalg import Field, FieldKind, Matrix, Subspace, dense, flip, quotient, rank_factorization, solve, sparse

Q = Field.rational()
F5 = Field.prime(5)

small_ints = st.integers(min_value=-4, max_value=4)


def matrices(rows: int, cols: int):
    return st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_field_parsing() -> None:
    assert Q("3/6") == gmpy2.mpq(1, 2)
    assert Q(-2) == gmpy2.mpq(-2)
    assert F5("1/2") == 3
    assert F5(-1) == 4
    assert Q.kind is FieldKind.RATIONAL
    assert F5.kind is FieldKind.PRIME


@pytest.mark.parametrize("bad", ["x", "1/0", "-2/0", True])
def test_field_rejects_non_scalars(bad) -> None:
    with pytest.raises(ValueError, match="Not a scalar"):
        Q(bad)


def test_sparse_drops_zero_residues() -> None:
    assert sparse(F5, [5, 1, 0, 7]) == {1: 1, 3: 2}
    assert sparse(Q, {2: Q("1/3"), 0: 0}) == {2: gmpy2.mpq(1, 3)}
    assert dense(F5, sparse(F5, [5, 1, 0, 7]), 4) == (0, 1, 0, 2)


def test_prime_field_rejects_composite_and_non_invertible() -> None:
    with pytest.raises(ValueError):
        Field.prime(4)
    with pytest.raises(ValueError):
        F5("1/5")


RREF_CASES = [
    ([[2, 4], [1, 2]], 1),
    ([[1, 0], [0, 1]], 2),
    ([[0, 0], [0, 0]], 0),
    ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 2),
]


@pytest.mark.parametrize("rows, expected", RREF_CASES)
def test_rank(rows, expected) -> None:
    assert Matrix.from_rows(Q, rows).rank() == expected


def test_rank_depends_on_characteristic() -> None:
    rows = [[1, 1], [1, -1]]
    assert Matrix.from_rows(Q, rows).rank() == 2
    assert Matrix.from_rows(Field.prime(2), rows).rank() == 1


def test_solve_reports_kernel() -> None:
    a = Matrix.from_rows(Q, [[1, 1]])
    b = Matrix.from_rows(Q, [[1]])
    solution, kernel = solve(a, b)
    assert solution is not None
    assert (a @ solution) == b
    assert kernel.dim == 1


def test_solve_detects_inconsistency() -> None:
    a = Matrix.from_rows(Q, [[1, 1], [2, 2]])
    b = Matrix.from_rows(Q, [[1], [3]])
    solution, _ = solve(a, b)
    assert solution is None


def test_solve_shape_mismatch() -> None:
    with pytest.raises(ValueError):
        solve(Matrix.from_rows(Q, [[1, 1]]), Matrix.from_rows(Q, [[1], [2]]))


QUOTIENT_CASES = [
    (3, [], 3),
    (3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], 0),
    (4, [[1, -1, 0, 0]], 3),
]


@pytest.mark.parametrize("ambient, relations, expected", QUOTIENT_CASES)
def test_quotient_dimension(ambient, relations, expected) -> None:
    space = quotient(ambient, Subspace.span(Q, ambient, relations))
    assert space.dim == expected
    assert (space.projection @ space.section).is_identity() or space.dim == 0
    for row in space.relations.vectors():
        assert not any(space.projection.apply(row))


def test_quotient_rejects_foreign_relations() -> None:
    with pytest.raises(ValueError):
        quotient(3, Subspace.full(Q, 2))


def test_flip_swaps_tensor_factors() -> None:
    swap = flip(Q, 2, 3)
    x = (Q(1), Q(2))
    y = (Q(3), Q(4), Q(5))
    xy = tuple(a * b for a in x for b in y)
    yx = tuple(b * a for b in y for a in x)
    assert swap.apply(xy) == yx


@settings(max_examples=40, deadline=None)
@given(matrices(3, 4))
def test_rank_nullity(rows) -> None:
    m = Matrix.from_rows(Q, rows)
    kernel = m.kernel()
    assert m.rank() + kernel.dim == m.cols
    for vector in kernel.vectors():
        assert not any(m.apply(vector))


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3), matrices(3, 3))
def test_product_rank_bound(left, right) -> None:
    a = Matrix.from_rows(Q, left)
    b = Matrix.from_rows(Q, right)
    assert (a @ b).rank() <= min(a.rank(), b.rank())


@settings(max_examples=40, deadline=None)
@given(matrices(3, 4))
def test_rank_factorization_reproduces_matrix(rows) -> None:
    m = Matrix.from_rows(Q, rows)
    c, r = rank_factorization(m)
    assert c.cols == r.rows == m.rank()
    if m.rank():
        assert c @ r == m


@settings(max_examples=40, deadline=None)
@given(matrices(2, 4), matrices(2, 4))
def test_intersection_and_sum_dimensions(first, second) -> None:
    u = Subspace.span(Q, 4, first)
    w = Subspace.span(Q, 4, second)
    meet = u.intersection(w)
    assert u.dim + w.dim == u.sum(w).dim + meet.dim
    assert meet.is_subspace_of(u) and meet.is_subspace_of(w)


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3))
def test_rank_agrees_with_fractions(rows) -> None:
    m = Matrix.from_rows(Q, rows)
    # Gaussian elimination with the standard library as an independent oracle
    grid = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    for col in range(3):
        pivot = next((r for r in range(rank, 3) if grid[r][col] != 0), None)
        if pivot is None:
            continue
        grid[rank], grid[pivot] = grid[pivot], grid[rank]
        for r in range(3):
            if r != rank and grid[r][col] != 0:
                factor = grid[r][col] / grid[rank][col]
                grid[r] = [a - factor * b for a, b in zip(grid[r], grid[rank])]
        rank += 1
    assert m.rank() == rank
