#!/usr/bin/env python3
# coding=utf-8

"""
Tests for formal sums and linear algebra over F2.
"""

import logging

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from vt.utils.errors.error_specs import ERR_INVALID_USAGE

from steenbolt.exceptions import SteenboltExitingException
from steenbolt.f2 import BitMatrix, FormalSum, rank, rank_and_kernel, rref, solve_membership

bit_matrices = st.integers(0, 6).flatmap(
    lambda rows: st.integers(0, 6).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(0, 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows
        ).map(lambda data: BitMatrix(np.array(data, dtype=np.uint8).reshape(rows, cols)))
    )
)


class TestFormalSum:
    def test_mod2_collapse(self):
        assert FormalSum.of([3, 1, 3, 2, 3]).ordered == (1, 2, 3)

    def test_zero(self):
        assert FormalSum.zero().is_zero()
        assert not FormalSum.zero()

    @given(st.lists(st.integers(0, 9)), st.lists(st.integers(0, 9)))
    def test_addition_is_symmetric_difference(self, xs, ys):
        a, b = FormalSum.of(xs), FormalSum.of(ys)
        assert (a + b).terms == a.terms ^ b.terms
        assert (a + b) + b == a

    def test_flat_map_is_linear(self):
        doubled = FormalSum.of([1, 2]).flat_map(lambda k: [k, 10 * k])
        assert doubled.ordered == (1, 2, 10, 20)
        assert FormalSum.of([1, 1]).flat_map(lambda k: [k]).is_zero()


class TestBitMatrix:
    def test_entries_reduced_mod2(self):
        assert BitMatrix(np.array([[2, 3]])).entries.tolist() == [[0, 1]]

    def test_needs_2d(self):
        with pytest.raises(SteenboltExitingException) as e:
            BitMatrix(np.zeros(3, dtype=np.uint8))
        assert e.value.exit_code == ERR_INVALID_USAGE

    def test_read_only(self):
        with pytest.raises(ValueError):
            BitMatrix.identity(2).entries[0, 0] = 0

    def test_from_columns(self):
        m = BitMatrix.from_columns([[1, 0, 1], [0, 1, 1]], 3)
        assert m.entries.tolist() == [[1, 0], [0, 1], [1, 1]]
        assert (m.rows, m.cols) == (3, 2)
        assert BitMatrix.from_columns([], 4).entries.shape == (4, 0)

    def test_equality_and_hash(self):
        assert BitMatrix.identity(2) == BitMatrix(np.eye(2, dtype=np.uint8))
        assert hash(BitMatrix.identity(2)) == hash(BitMatrix(np.eye(2, dtype=np.uint8)))
        assert BitMatrix.identity(2) != BitMatrix.zeros(2, 2)


class TestElimination:
    def test_rref_pivots(self):
        reduced, pivots = rref(BitMatrix(np.array([[0, 1, 1], [0, 1, 0]])))
        assert pivots == [1, 2]
        assert reduced.tolist() == [[0, 1, 0], [0, 0, 1]]

    def test_rank_over_f2(self):
        # rank 2 over F2, although the rows are independent over Q
        m = BitMatrix(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]]))
        assert rank(m) == 2

    @given(bit_matrices)
    def test_rank_nullity(self, m):
        r, kernel = rank_and_kernel(m)
        assert r + len(kernel) == m.cols
        for v in kernel:
            assert not m.apply(v).any()

    def test_rank_and_kernel_logged_at_debug(self, caplog):
        m = BitMatrix(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]]))
        with caplog.at_level(logging.DEBUG, logger="steenbolt.f2"):
            rank_and_kernel(m)
        assert "3x3 matrix: rank 2, kernel dimension 1" in caplog.messages

    @given(bit_matrices, st.data())
    def test_membership_of_images(self, m, data):
        coords = data.draw(st.lists(st.integers(0, 1), min_size=m.cols, max_size=m.cols))
        target = m.apply(coords) if m.cols else np.zeros(m.rows, dtype=np.uint8)
        solution = solve_membership(m, target)
        assert solution is not None
        if m.cols:
            assert np.array_equal(m.apply(solution), target)

    def test_membership_outside_span(self):
        m = BitMatrix(np.array([[1], [1]]))
        assert solve_membership(m, [1, 0]) is None

    def test_membership_length_mismatch(self):
        with pytest.raises(SteenboltExitingException) as e:
            solve_membership(BitMatrix.identity(2), [1, 0, 1])
        assert e.value.exit_code == ERR_INVALID_USAGE
