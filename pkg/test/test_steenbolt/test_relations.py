#!/usr/bin/env python3
# coding=utf-8

"""
Tests for the exact relation checks inside the surjection operad.
"""

import itertools

import pytest
from vt.utils.errors.error_specs import ERR_INVALID_USAGE

from steenbolt.exceptions import SteenboltExitingException
from steenbolt.models import CheckReport
from steenbolt.relations import (
    SUITES,
    SlotConvention,
    assemble_ehga_sides,
    assemble_hga_assoc_sides,
    check_ehga,
    check_filtration,
    check_g_relations,
    check_hga_assoc,
    check_hga_consequences,
    check_remark1_identities,
    ehga_grid,
    g12_sides,
    g21_sides,
    hirsch_sides,
    left_hirsch_sides,
    product,
    suite_checks,
    twisted,
)
from steenbolt.surjection import SurjChain, parse_chain, print_chain


class TestEhga:
    @pytest.mark.parametrize(
        "k, m, n",
        [
            *itertools.product(range(0, 4), range(1, 4), range(1, 4)),
            *((k, m, n) for k in range(0, 3) for m in range(1, 5) for n in range(1, 5) if 4 in (m, n)),
        ],
    )
    def test_relation_holds(self, k, m, n):
        report = check_ehga(k, m, n)
        assert report.passed, report.dump()

    def test_twist_on_first_factor_fails(self):
        report = check_ehga(1, 2, 2, twist_on="first")
        assert not report.passed
        assert report.difference is not None and not report.difference.is_zero()
        assert any(line.startswith("  difference: ") for line in report.dump())

    def test_k0_sides_are_hga_relation(self):
        lhs, rhs = assemble_ehga_sides(0, 1, 1)
        assert rhs.is_zero()
        assert lhs.is_zero()

    def test_certificate(self):
        assert check_ehga(1, 2, 2).certificate() == "EHGA k=1 m=2 n=2 PASS (lhs_terms=0, rhs_terms=0)"

    def test_guard(self):
        with pytest.raises(SteenboltExitingException) as e:
            check_ehga(1, 9, 9, unsafe_large=False)
        assert e.value.exit_code == ERR_INVALID_USAGE


class TestHgaAssoc:
    @pytest.mark.parametrize("m, n", [(m, n) for m in range(1, 5) for n in range(1, 5) if m + n <= 5])
    def test_relation_holds(self, m, n):
        assert check_hga_assoc(m, n).passed

    def test_lowest_case(self):
        lhs, rhs = assemble_hga_assoc_sides(1, 1)
        assert print_chain(lhs) == "(1,2,1,3,1) + (1,2,3,2,1) + (1,3,1,2,1)"
        assert lhs == rhs


class TestNamedIdentities:
    @pytest.mark.parametrize("sides", [hirsch_sides, left_hirsch_sides, g21_sides, g12_sides])
    def test_sides_agree(self, sides):
        lhs, rhs = sides()
        assert lhs == rhs

    def test_remark1(self):
        assert check_remark1_identities().certificate() == "REMARK1 PASS (identities=2)"

    def test_g(self):
        assert check_g_relations().certificate() == "G PASS (identities=2)"

    def test_hga_consequences(self):
        report = check_hga_consequences()
        assert report.passed
        assert report.name == "HGA"


class TestFiltration:
    def test_certificate(self):
        assert check_filtration(1, 1, 1).certificate() == "FILTRATION k=1 p=1 q=1 PASS (max_complexity=3, terms=1)"

    @pytest.mark.parametrize("k, p, q", [(2, 3, 2), (3, 2, 2), (4, 1, 3)])
    def test_passes(self, k, p, q):
        assert check_filtration(k, p, q).passed


class TestAssemblyHelpers:
    def test_product_with_unit(self):
        assert print_chain(product(parse_chain("(1,2,1)"), SurjChain.unit())) == "(1,2,1,3)"

    def test_product_with_zero(self):
        assert product(SurjChain.zero(2), SurjChain.unit()).is_zero()

    def test_twisted(self):
        assert print_chain(twisted(0, 1, 1, 1)) == "(2,1,2)"
        assert twisted(0, 1, 1, 2) == parse_chain("(1,2,1)")
        assert twisted(0, 2, 1, 1) == parse_chain("(3,1,3,2,3)")

    def test_split_routing(self):
        assert SlotConvention(2, 2).split_routing(1, 1).images == (1, 3, 2, 4)
        assert SlotConvention(2, 1).blockswap().images == (2, 3, 1)

    def test_slot_convention_needs_inputs(self):
        with pytest.raises(SteenboltExitingException):
            SlotConvention(0, 0)


class TestSuites:
    def test_grid_order(self):
        assert ehga_grid(0, 2) == [(0, 1, 1), (0, 1, 2), (0, 2, 1), (0, 2, 2)]

    def test_grid_size(self):
        assert len(suite_checks("ehga", max_k=2, max_arity=3)) == 27

    def test_single_instance(self):
        (check,) = suite_checks("ehga", k=1, m=2, n=2)
        assert check().certificate() == "EHGA k=1 m=2 n=2 PASS (lhs_terms=0, rhs_terms=0)"

    def test_all_suite_passes(self):
        reports = [check() for check in suite_checks("all", max_k=1, max_arity=2)]
        assert all(isinstance(r, CheckReport) for r in reports)
        assert all(r.passed for r in reports)
        assert {r.name for r in reports} == {"EHGA", "HGA-ASSOC", "HGA", "REMARK1", "G", "FILTRATION"}

    def test_unknown_suite(self):
        with pytest.raises(SteenboltExitingException) as e:
            suite_checks("nope")
        assert e.value.exit_code == ERR_INVALID_USAGE

    def test_over_guard(self):
        with pytest.raises(SteenboltExitingException):
            suite_checks("ehga", k=1, m=9, n=9)

    def test_over_guard_lifted(self):
        assert len(suite_checks("ehga", k=1, m=9, n=9, unsafe_large=True)) == 1

    def test_suite_names(self):
        assert SUITES[-1] == "all"
