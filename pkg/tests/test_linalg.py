from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singequiv import linalg
from singequiv.errors import ShapeMismatch
from singequiv.linalg import Field

F = Field(32003)
Q = Field.rational()


def small_matrices(max_side=6, values=st.integers(-3, 3)):
    return st.integers(0, max_side).flatmap(
        lambda r: st.integers(0, max_side).flatmap(
            lambda c: st.lists(st.lists(values, min_size=c, max_size=c), min_size=r, max_size=r).map(
                lambda rows: (r, c, rows)
            )
        )
    )


def as_array(field, rc_rows):
    r, c, rows = rc_rows
    return field.array(rows).reshape(r, c) if r and c else field.zeros((r, c))


def test_rank_examples():
    assert linalg.rank(F, F.eye(3)) == 3
    assert linalg.rank(F, F.zeros((2, 5))) == 0
    assert linalg.rank(F, F.array([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert linalg.kernel_basis(F, F.eye(4)).shape == (4, 0)
    assert F.equal(linalg.kernel_basis(F, F.zeros((2, 3))), F.eye(3))
    k = linalg.kernel_basis(F, F.array([[1, 1]]))
    assert k.shape == (2, 1)
    assert F.equal(k[:, 0], F.array([-1, 1])) or F.equal(k[:, 0], F.array([1, -1]))


def test_solve_examples():
    b = F.array([5, 7, 11])
    x, kern = linalg.solve(F, F.eye(3), b)
    assert F.equal(x, b) and kern.shape == (3, 0)
    assert linalg.solve(F, F.zeros((2, 2)), F.array([1, 0])) is None
    x, kern = linalg.solve(F, F.array([[1, 1], [0, 0]]), F.array([2, 0]))
    assert F.equal(x, F.array([2, 0]))
    assert kern.shape == (2, 1) and F.is_zero(F.matmul(F.array([[1, 1]]), kern))


def test_solve_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        linalg.solve(F, F.eye(2), F.array([1, 2, 3]))


def test_field_rejects_composite():
    with pytest.raises(ValueError):
        Field(32004)


def test_rational_rank_matches_float_oracle():
    rng = np.random.default_rng(5)
    for _ in range(200):
        r, c = rng.integers(1, 6, size=2)
        m = rng.integers(-2, 3, size=(r, c))
        if rng.random() < 0.5 and r > 1:
            m[-1] = m[0] * 2 - m[1 % r]
        assert linalg.rank(Q, Q.array(m)) == np.linalg.matrix_rank(m.astype(float))


@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_rank_nullity_and_kernel(rc_rows):
    for field in (F, Q):
        m = as_array(field, rc_rows)
        k = linalg.kernel_basis(field, m)
        assert linalg.rank(field, m) + k.shape[1] == m.shape[1]
        assert field.is_zero(field.matmul(m, k))
        assert linalg.rank(field, k) == k.shape[1]


@settings(max_examples=100, deadline=None)
@given(small_matrices(), st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_solve_particular_solution(rc_rows, coeffs):
    m = as_array(F, rc_rows)
    x0 = F.array(coeffs[: m.shape[1]])
    b = F.matmul(m, x0.reshape(-1, 1))
    x, kern = linalg.solve(F, m, b)
    assert F.equal(F.matmul(m, x), b)
    assert kern.shape[1] == m.shape[1] - linalg.rank(F, m)


@settings(max_examples=100, deadline=None)
@given(small_matrices(max_side=5))
def test_quotient_maps_section(rc_rows):
    sub = as_array(F, rc_rows)
    n = sub.shape[0]
    Qm, S = linalg.quotient_maps(F, sub, n)
    assert F.equal(F.matmul(Qm, S), F.eye(Qm.shape[0]))
    if sub.size:
        assert F.is_zero(F.matmul(Qm, sub))
    assert Qm.shape[0] == n - linalg.rank(F, sub)


@given(st.integers(1, 32002), st.integers(1, 32002), st.integers(0, 32002))
def test_prime_field_arithmetic(a, b, c):
    assert F.scalar(a * F.inv_scalar(a)) == 1
    assert F.scalar(a * (b + c)) == F.scalar(a * b + a * c)
    assert F.scalar(Fraction(a, b)) == F.scalar(a * F.inv_scalar(b))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_inverse_round_trip(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 6))
    m = F.random(rng, (n, n))
    if not linalg.is_invertible(F, m):
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(F, m)
        return
    assert F.equal(F.matmul(m, linalg.inverse(F, m)), F.eye(n))


def test_column_space_coordinates():
    m = F.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    B, coords = linalg.column_space(F, m)
    assert B.shape[1] == 2
    assert F.equal(B[coords, :], F.eye(2))
    assert linalg.in_span(F, B, m)
