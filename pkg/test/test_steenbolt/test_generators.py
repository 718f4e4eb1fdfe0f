#!/usr/bin/env python3
# coding=utf-8

"""
Tests for the ``E^k_{p,q}`` elements and their admissible tables.
"""

import pytest
from vt.utils.errors.error_specs import ERR_DATA_FORMAT_ERR, ERR_INVALID_USAGE

from steenbolt.exceptions import SteenboltExitingException
from steenbolt.generators import (
    admissible_tables,
    cup_string,
    e1_closed,
    e2_closed,
    g_elements,
    generator,
    generator_chain,
)
from steenbolt.surjection import SurjChain, Surjection, chain_complexity, complexity, print_chain


def eq2_string(q: int) -> tuple[int, ...]:
    entries = [1]
    for b in range(2, q + 2):
        entries.extend((b, 1))
    return tuple(entries)


class TestGoldenStrings:
    @pytest.mark.parametrize("q", range(1, 9))
    def test_e0_1q(self, q):
        assert generator(0, 1, q).chain == SurjChain.of(q + 1, [eq2_string(q)])

    def test_e2_45_contains(self):
        s = Surjection((1, 5, 1, 6, 1, 7, 1, 7, 2, 7, 3, 7, 4, 7, 4, 8, 4, 9, 4))
        assert s in generator(2, 4, 5).chain

    def test_e4_33_contains(self):
        s = Surjection((1, 4, 1, 5, 1, 6, 1, 6, 2, 6, 2, 6, 3, 6, 3))
        assert s in generator(4, 3, 3).chain

    @pytest.mark.parametrize("k", range(0, 7))
    def test_e_k11_is_cup_string(self, k):
        assert generator(k, 1, 1).chain == SurjChain.of(2, [cup_string(k + 1)])

    @pytest.mark.parametrize("p, q", [(2, 1), (3, 2), (4, 4)])
    def test_e0_vanishes_for_p_above_1(self, p, q):
        assert generator(0, p, q).chain.is_zero()


class TestClosedForms:
    @pytest.mark.parametrize("p", range(1, 6))
    @pytest.mark.parametrize("q", range(1, 6))
    def test_e1(self, p, q):
        chain = generator(1, p, q).chain
        assert chain == e1_closed(p, q)
        assert len(chain) == 1

    @pytest.mark.parametrize("p", range(1, 6))
    @pytest.mark.parametrize("q", range(1, 6))
    def test_e2(self, p, q):
        chain = generator(2, p, q).chain
        assert chain == e2_closed(p, q)
        assert len(chain) == q

    def test_cli_example(self):
        assert print_chain(generator(1, 2, 2).chain) == "(1,3,1,4,1,4,2,4)"


class TestShape:
    @pytest.mark.parametrize("k, p, q", [(0, 1, 3), (1, 2, 2), (2, 3, 2), (3, 2, 3), (4, 3, 3)])
    def test_arity_degree_and_length(self, k, p, q):
        chain = generator(k, p, q).chain
        assert chain.arity == p + q
        assert chain.degree == p + q + k - 1
        assert all(len(u) == 2 * (p + q) + k - 1 for u in chain)

    @pytest.mark.parametrize("k, p, q", [(2, 2, 2), (3, 3, 2), (4, 2, 3)])
    def test_tables_flatten_to_terms(self, k, p, q):
        element = generator(k, p, q)
        assert {t.flatten() for t in element.tables} == set(element.chain)
        for t in element.tables:
            assert len(t.rows) == k + 3
            assert t.rows[0] == (1,)
            assert t.rows[-1] in ((t.rows[-2][-1],), (t.rows[-3][-1],))

    @pytest.mark.parametrize("k", range(0, 5))
    @pytest.mark.parametrize("p", range(1, 6))
    @pytest.mark.parametrize("q", range(1, 6))
    def test_table_rows_and_emission_profile(self, k, p, q):
        for t in admissible_tables(k, p, q):
            profile = t.emission_profile
            assert len(profile) == k + 2
            assert sum(profile) == p + q - 1, str(t)
            assert sum(profile[0::2]) == q, str(t)
            assert sum(profile[1::2]) == p - 1, str(t)
            assert len(t.rows) == k + 3
            assert t.rows[0] == (1,)
            assert t.rows[1][0] == p + 1, str(t)
            assert all(len(row) % 2 == 1 for row in t.rows), str(t)

    @pytest.mark.parametrize("k", range(0, 5))
    @pytest.mark.parametrize("p", range(1, 5))
    @pytest.mark.parametrize("q", range(1, 5))
    def test_filtration_bound(self, k, p, q):
        assert chain_complexity(generator(k, p, q).chain) <= k + 2

    @pytest.mark.parametrize("k", range(0, 5))
    def test_filtration_attained(self, k):
        assert max(complexity(u) for u in generator(k, 1, 1).chain) == k + 2


class TestUnits:
    def test_one_sided_units(self):
        assert generator_chain(0, 1, 0) == SurjChain.of(1, [(1,)])
        assert generator_chain(0, 0, 1) == SurjChain.of(1, [(1,)])

    @pytest.mark.parametrize("k, p, q", [(1, 1, 0), (0, 2, 0), (0, 0, 0), (-1, 1, 1)])
    def test_other_degenerate_cases_vanish(self, k, p, q):
        assert generator_chain(k, p, q).is_zero()


class TestValidation:
    @pytest.mark.parametrize("k, p, q", [(-1, 1, 1), (0, 0, 1), (0, 1, 0)])
    def test_out_of_range(self, k, p, q):
        with pytest.raises(SteenboltExitingException) as e:
            admissible_tables(k, p, q)
        assert e.value.exit_code == ERR_INVALID_USAGE

    @pytest.mark.parametrize("k", ["1", 1.0, None])
    def test_not_int(self, k):
        with pytest.raises(SteenboltExitingException) as e:
            admissible_tables(k, 1, 1)  # type: ignore[arg-type] # expects int, provided Any
        assert e.value.exit_code == ERR_DATA_FORMAT_ERR


def test_g_elements_shape():
    for g in g_elements():
        assert (g.arity, g.degree) == (3, 4)
        assert complexity(g) <= 3
