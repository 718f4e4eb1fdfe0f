#!/usr/bin/env python3
# coding=utf-8

"""
Exact linear algebra over the two-element field.

``FormalSum`` is the mod-2 formal sum every other module builds on. ``BitMatrix`` and the elimination routines
back the cohomology computations.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Protocol

import numpy as np
from vt.utils.errors.error_specs import ERR_INVALID_USAGE

from steenbolt.exceptions import SteenboltExitingException

logger = logging.getLogger(__name__)


class Ordered(Protocol):
    """
    Basis keys of a ``FormalSum`` must be totally ordered so that iteration and printing are deterministic.
    """

    def __lt__(self, other: Any, /) -> bool: ...


def mod2(keys: Iterable[Any]) -> frozenset[Any]:
    """
    Collapse a stream of keys modulo 2: a key survives iff it occurs an odd number of times.

    >>> sorted(mod2([3, 1, 3, 2, 1, 1]))
    [1, 2]
    """
    acc: set[Any] = set()
    for key in keys:
        if key in acc:
            acc.remove(key)
        else:
            acc.add(key)
    return frozenset(acc)


@dataclass(frozen=True)
class FormalSum[K: Ordered]:
    """
    A formal sum of basis keys with coefficients in F2.

    A key present in ``terms`` has coefficient 1. Addition is the symmetric difference of term sets.

    >>> x = FormalSum.of(["a", "b"])
    >>> (x + x).is_zero()
    True
    >>> list(FormalSum.of(["b", "a", "c", "a"]))
    ['b', 'c']
    """

    terms: frozenset[K] = field(default_factory=frozenset)

    @classmethod
    def of(cls, keys: Iterable[K]) -> FormalSum[K]:
        """
        Build a sum from possibly repeated keys, applying the mod-2 collapse.
        """
        return cls(mod2(keys))

    @classmethod
    def zero(cls) -> FormalSum[K]:
        return cls()

    @cached_property
    def ordered(self) -> tuple[K, ...]:
        return tuple(sorted(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def flat_map[J: Ordered](self, f: Callable[[K], Iterable[J]]) -> FormalSum[J]:
        """
        Extend ``f`` linearly: the image of a sum is the mod-2 sum of the images of its keys.

        >>> FormalSum.of([1, 2]).flat_map(lambda k: [k, k + 1]).ordered
        (1, 3)
        """
        return FormalSum.of(key for term in self.ordered for key in f(term))

    def __add__(self, other: FormalSum[K]) -> FormalSum[K]:
        return FormalSum(self.terms ^ other.terms)

    def __iter__(self) -> Iterator[K]:
        return iter(self.ordered)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __contains__(self, key: object) -> bool:
        return key in self.terms


def sum_add[K: Ordered](a: FormalSum[K], b: FormalSum[K]) -> FormalSum[K]:
    """
    Add two formal sums over F2.

    >>> sum_add(FormalSum.of(["x"]), FormalSum.of(["x"])).is_zero()
    True
    >>> sum_add(FormalSum.of(["x", "y"]), FormalSum.of(["y", "z"])).ordered
    ('x', 'z')
    """
    return a + b


# region matrices
@dataclass(frozen=True, eq=False)
class BitMatrix:
    """
    An immutable matrix over F2 backed by a ``uint8`` numpy array.

    >>> m = BitMatrix.identity(3)
    >>> m.rows, m.cols
    (3, 3)
    >>> m.entries.flags.writeable
    False
    """

    entries: np.ndarray

    def __post_init__(self):
        arr = (np.asarray(self.entries) & 1).astype(np.uint8, copy=True)
        if arr.ndim != 2:
            errmsg = f"BitMatrix needs a 2-dimensional array, got {arr.ndim} dimensions."
            raise SteenboltExitingException(
                errmsg, exit_code=ERR_INVALID_USAGE
            ) from ValueError(errmsg)
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> BitMatrix:
        """
        Build a ``rows``-row matrix from column vectors. Zero columns give a ``rows`` by 0 matrix.
        """
        arr = np.zeros((rows, len(columns)), dtype=np.uint8)
        for j, col in enumerate(columns):
            arr[:, j] = np.asarray(col, dtype=np.uint8).reshape(rows)
        return cls(arr)

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    def apply(self, v: Sequence[int] | np.ndarray) -> np.ndarray:
        """
        Multiply by a column vector over F2.

        >>> BitMatrix.identity(2).apply([1, 0]).tolist()
        [1, 0]
        """
        vec = np.asarray(v, dtype=np.int64).reshape(self.cols)
        return ((self.entries.astype(np.int64) @ vec) & 1).astype(np.uint8)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.entries.shape, self.entries.tobytes()))


def rref(m: BitMatrix) -> tuple[np.ndarray, list[int]]:
    """
    Reduced row echelon form over F2.

    Pivoting takes the leftmost column with a nonzero entry at or below the current row, and the topmost such row.

    :return: the reduced matrix (a fresh writeable array) and its pivot columns.
    """
    a = m.entries.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        hits = np.where(a[r:, c] == 1)[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            a[[r, p], :] = a[[p, r], :]
        ones = np.where(a[:, c] == 1)[0]
        ones = ones[ones != r]
        if ones.size:
            a[ones, :] ^= a[r, :]
        pivots.append(c)
        r += 1
    return a, pivots


def rank_and_kernel(m: BitMatrix) -> tuple[int, list[np.ndarray]]:
    """
    Rank and a kernel basis of ``m`` over F2.

    >>> rank_and_kernel(BitMatrix.identity(3))
    (3, [])
    >>> r, kernel = rank_and_kernel(BitMatrix.zeros(2, 4))
    >>> r, len(kernel)
    (0, 4)

    :return: ``(rank, kernel_basis)`` with ``rank + len(kernel_basis) == m.cols``; each basis vector ``v`` satisfies
        ``m.apply(v) == 0``.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    kernel: list[np.ndarray] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = np.zeros(m.cols, dtype=np.uint8)
        v[free] = 1
        for row, pc in enumerate(pivots):
            v[pc] = reduced[row, free]
        kernel.append(v)
    logger.debug("%dx%d matrix: rank %d, kernel dimension %d", m.rows, m.cols, len(pivots), len(kernel))
    return len(pivots), kernel


def rank(m: BitMatrix) -> int:
    return len(rref(m)[1])


def solve_membership(m: BitMatrix, v: Sequence[int] | np.ndarray) -> np.ndarray | None:
    """
    Coordinates ``c`` with ``m.apply(c) == v`` when ``v`` lies in the column space of ``m``.

    >>> solve_membership(BitMatrix.identity(2), [1, 0]).tolist()
    [1, 0]
    >>> solve_membership(BitMatrix.zeros(2, 2), [0, 1]) is None
    True
    >>> solve_membership(BitMatrix.identity(2), [1, 0, 1])
    Traceback (most recent call last):
    steenbolt.exceptions.SteenboltExitingException: ValueError: vector has length 3 but the matrix has 2 rows.

    :return: one solution (free coordinates set to 0), or ``None`` when ``v`` is not in the column space.
    :raises SteenboltExitingException: when the length of ``v`` differs from the number of rows.
    """
    vec = (np.asarray(v).reshape(-1) & 1).astype(np.uint8)
    if vec.shape[0] != m.rows:
        errmsg = f"vector has length {vec.shape[0]} but the matrix has {m.rows} rows."
        raise SteenboltExitingException(
            errmsg, exit_code=ERR_INVALID_USAGE
        ) from ValueError(errmsg)
    augmented = BitMatrix(np.concatenate([m.entries, vec[:, None]], axis=1))
    reduced, pivots = rref(augmented)
    if m.cols in pivots:
        return None
    solution = np.zeros(m.cols, dtype=np.uint8)
    for row, pc in enumerate(pivots):
        solution[pc] = reduced[row, m.cols]
    return solution


# endregion
