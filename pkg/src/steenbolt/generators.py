#!/usr/bin/env python3
# coding=utf-8

"""
The elements ``E^k_{p,q}`` of the surjection operad, built from admissible tables, together with their closed-form
families and a few named elements.

Inputs ``1..p`` are the ``a``-inputs and ``p+1..p+q`` the ``b``-inputs.

An admissible table has ``k+3`` rows alternating between the ``A`` sequence ``1..p`` (odd rows) and the ``B``
sequence ``p+1..p+q`` (even rows):

* row 1 is ``(1)``;
* row 2 emits ``t_2 >= 1`` fresh ``B`` values separated by ``1``;
* every later row restarts with the last value of its own sequence, emits ``t >= 0`` fresh values of that sequence at
  odd positions and repeats the other sequence's last value at even positions;
* the last row emits nothing.

``B`` rows emit ``q`` values in total and ``A`` rows after the first emit ``p-1``.

Note that ``E^k_{1,1}`` is the alternating string of length ``k+3``, i.e. the ``⌣_{k+1}`` string, for every ``k``,
including even ``k``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from steenbolt.constants import ROW_SEP
from steenbolt.exceptions import SteenboltException
from steenbolt.surjection import SurjChain, Surjection
from steenbolt.validators import UtilGeneratorArgsValidator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdmissibleTable:
    """
    One admissible table of ``E^k_{p,q}``.

    >>> t = admissible_tables(0, 1, 3)[0]
    >>> str(t)
    '(1;2,1,3,1,4;1)'
    >>> t.emission_profile
    (3, 0)
    """

    k: int
    p: int
    q: int
    rows: tuple[tuple[int, ...], ...]
    emission_profile: tuple[int, ...]
    """
    New-value counts ``(t_2, ..., t_{k+3})`` per row after the first.
    """

    def flatten(self) -> Surjection:
        return flatten(self)

    def __str__(self) -> str:
        return "(" + ROW_SEP.join(",".join(map(str, row)) for row in self.rows) + ")"


@dataclass(frozen=True)
class GeneratorElement:
    """
    ``E^k_{p,q}`` as a chain together with the tables it sums.
    """

    k: int
    p: int
    q: int
    chain: SurjChain
    tables: tuple[AdmissibleTable, ...]


def _row(own_start: int, other: int, emitted: int) -> tuple[int, ...]:
    row = [own_start]
    for step in range(1, emitted + 1):
        row.extend((other, own_start + step))
    return tuple(row)


def _enumerate(
    k: int, p: int, q: int
) -> Iterator[tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]]:
    row_count = k + 3

    def walk(
        r: int,
        last_a: int,
        last_b: int,
        left_a: int,
        left_b: int,
        rows: tuple[tuple[int, ...], ...],
        profile: tuple[int, ...],
    ) -> Iterator[tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]]:
        a_row = r % 2 == 1
        if r == row_count:
            if left_a == 0 and left_b == 0:
                yield rows + (((last_a if a_row else last_b),),), profile + (0,)
            return
        budget = left_a if a_row else left_b
        for t in range(budget + 1):
            if a_row:
                row = _row(last_a, last_b, t)
                yield from walk(
                    r + 1, last_a + t, last_b, left_a - t, left_b, rows + (row,), profile + (t,)
                )
            else:
                row = _row(last_b, last_a, t)
                yield from walk(
                    r + 1, last_a, last_b + t, left_a, left_b - t, rows + (row,), profile + (t,)
                )

    # row 2 opens the B sequence at p+1 with 1 in between
    for t2 in range(1, q + 1):
        second = [p + 1]
        for step in range(2, t2 + 1):
            second.extend((1, p + step))
        yield from walk(3, 1, p + t2, p - 1, q - t2, ((1,), tuple(second)), (t2,))


def admissible_tables(k: int, p: int, q: int) -> list[AdmissibleTable]:
    """
    All admissible tables of ``E^k_{p,q}``, in a fixed enumeration order.

    >>> [str(t) for t in admissible_tables(0, 1, 3)]
    ['(1;2,1,3,1,4;1)']
    >>> admissible_tables(0, 2, 1)
    []
    >>> '(1;4,1,5,1,6;1,6,2;6;2,6,3;6;3)' in [str(t) for t in admissible_tables(4, 3, 3)]
    True

    :raises SteenboltExitingException: for ``k < 0`` or ``p, q < 1``.
    """
    UtilGeneratorArgsValidator().validate(k, p, q)
    return [
        AdmissibleTable(k, p, q, rows, profile) for rows, profile in _enumerate(k, p, q)
    ]


def flatten(table: AdmissibleTable) -> Surjection:
    """
    Concatenate the rows of a table.

    >>> str(flatten(admissible_tables(0, 1, 1)[0]))
    '(1,2,1)'

    :raises SteenboltException: if the concatenation is degenerate, which admissible tables never are.
    """
    entries = tuple(e for row in table.rows for e in row)
    for i in range(len(entries) - 1):
        if entries[i] == entries[i + 1]:
            raise SteenboltException(
                f"table {table} flattens to a degenerate string at position {i + 1}."
            )
    return Surjection(entries)


@lru_cache(maxsize=None)
def generator(k: int, p: int, q: int) -> GeneratorElement:
    """
    ``E^k_{p,q}``: the sum of the flattened admissible tables.

    >>> str(generator(0, 1, 2).chain)
    '(1,2,1,3,1)'
    >>> str(generator(1, 1, 1).chain)
    '(1,2,1,2)'
    >>> len(generator(2, 3, 4).chain)
    4
    >>> generator(0, 2, 1).chain.is_zero()
    True
    """
    tables = tuple(admissible_tables(k, p, q))
    strings = [flatten(t) for t in tables]
    chain = SurjChain.of(p + q, strings) if strings else SurjChain.zero(p + q)
    if len(chain) != len(tables):
        raise SteenboltException(
            f"E^{k}_{{{p},{q}}} has {len(tables)} tables but only {len(chain)} distinct strings."
        )
    logger.debug("E^%d_{%d,%d}: %d tables", k, p, q, len(tables))
    return GeneratorElement(k, p, q, chain, tables)


def generator_chain(k: int, p: int, q: int) -> SurjChain:
    """
    ``E^k_{p,q}`` as a chain, extended to empty sides: ``E^0_{1,0} = E^0_{0,1} = (1)`` and every other ``E`` with an
    empty side is zero.

    >>> str(generator_chain(0, 1, 0)), str(generator_chain(0, 0, 1)), str(generator_chain(1, 0, 1))
    ('(1)', '(1)', '0')
    """
    if k < 0:
        return SurjChain.zero(p + q)
    if p == 0 or q == 0:
        if k == 0 and p + q == 1:
            return SurjChain.unit()
        return SurjChain.zero(p + q)
    return generator(k, p, q).chain


def _alternate(first: int, fill: int, last: int) -> list[int]:
    out = [first]
    for value in range(first + 1, last + 1):
        out.extend((fill, value))
    return out


def e1_closed(p: int, q: int) -> SurjChain:
    """
    ``E^1_{p,q} = (1; p+1,1,...,1,p+q; 1,p+q,2,...,p+q,p; p+q)``.

    >>> str(e1_closed(2, 2))
    '(1,3,1,4,1,4,2,4)'
    >>> str(e1_closed(1, 1))
    '(1,2,1,2)'
    """
    UtilGeneratorArgsValidator().validate(1, p, q)
    string = [1, *_alternate(p + 1, 1, p + q), *_alternate(1, p + q, p), p + q]
    return SurjChain.of(p + q, [string])


def e2_closed(p: int, q: int) -> SurjChain:
    """
    ``E^2_{p,q} = Σ_{j=0}^{q-1} (1; p+1,1,...,1,p+q-j; 1,p+q-j,2,...,p+q-j,p; p+q-j,p,...,p,p+q; p)``.

    >>> str(e2_closed(1, 1))
    '(1,2,1,2,1)'
    >>> len(e2_closed(4, 5))
    5
    """
    UtilGeneratorArgsValidator().validate(2, p, q)
    strings = []
    for j in range(q):
        top = p + q - j
        strings.append(
            [
                1,
                *_alternate(p + 1, 1, top),
                *_alternate(1, top, p),
                *_alternate(top, p, p + q),
                p,
            ]
        )
    return SurjChain.of(p + q, strings)


def cup_string(i: int) -> Surjection:
    """
    The alternating string ``(1,2,1,2,...)`` of length ``i+2``, representing ``⌣_i``.

    >>> str(cup_string(0)), str(cup_string(1)), str(cup_string(2))
    ('(1,2)', '(1,2,1)', '(1,2,1,2)')
    """
    UtilGeneratorArgsValidator().validate_non_negative(i, "i")
    return Surjection(tuple(1 + (j % 2) for j in range(i + 2)))


def g_elements() -> tuple[Surjection, Surjection]:
    """
    The two elements ``G_{1,2}`` and ``G_{2,1}`` of ``F_3χ(3)_4``.

    >>> [str(g) for g in g_elements()]
    ['(1,2,1,3,1,3,2)', '(1,2,3,2,3,1,3)']
    """
    return Surjection((1, 2, 1, 3, 1, 3, 2)), Surjection((1, 2, 3, 2, 3, 1, 3))
