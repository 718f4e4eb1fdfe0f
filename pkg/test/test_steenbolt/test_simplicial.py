#!/usr/bin/env python3
# coding=utf-8

"""
Tests for complexes, the interval-cut action on cochains, cohomology and Steenrod squares.
"""

import numpy as np
import pytest
from vt.utils.errors.error_specs import ERR_INVALID_USAGE

from steenbolt.constants import FIXTURE_NAMES
from steenbolt.exceptions import ComplexException, SteenboltExitingException
from steenbolt.simplicial import (
    Cochain,
    SimplicialComplex,
    check_cochain_chain_map,
    check_steenrod_coboundary,
    check_steenrod_well_defined,
    coboundary,
    coboundary_matrix,
    cohomology,
    cohomology_group,
    cup_i,
    evaluate,
    load_complex,
    parse_complex,
    steenrod_matrix,
    steenrod_square,
)
from steenbolt.surjection import SurjChain


def front_back_cup(x: Cochain, y: Cochain) -> Cochain:
    """
    x ⌣ y on each simplex: x on the front p-face times y on the back q-face.
    """
    p = x.dim
    simplices = x.complex.simplices_of(x.dim + y.dim)
    return Cochain.of(x.complex, x.dim + y.dim, [s for s in simplices if x.value(s[: p + 1]) and y.value(s[p:])])


class TestComplexes:
    @pytest.mark.parametrize(
        "name, f_vector",
        [
            ("circle", (3, 3)),
            ("delta1", (2, 1)),
            ("delta2", (3, 3, 1)),
            ("delta3", (4, 6, 4, 1)),
            ("delta4", (5, 10, 10, 5, 1)),
            ("delta5", (6, 15, 20, 15, 6, 1)),
            ("rp2", (6, 15, 10)),
        ],
    )
    def test_fixtures(self, name, f_vector):
        assert load_complex(name).f_vector == f_vector

    def test_all_fixtures_listed(self):
        assert {load_complex(name).name for name in FIXTURE_NAMES} == set(FIXTURE_NAMES)

    def test_rp2_is_a_closed_surface(self, rp2):
        for edge in rp2.simplices_of(1):
            assert sum(1 for t in rp2.simplices_of(2) if set(edge) <= set(t)) == 2
        assert rp2.euler_characteristic == 1

    def test_downward_closure(self):
        c = SimplicialComplex.from_facets([(2, 0, 1), (1, 3)])
        assert c.simplices_of(1) == ((0, 1), (0, 2), (1, 2), (1, 3))
        assert c.vertices == (0, 1, 2, 3)
        assert c.simplices_of(5) == ()

    def test_comments_and_blank_lines(self):
        assert parse_complex("# a triangle\n\n0 1 2  # the only facet\n").f_vector == (3, 3, 1)

    @pytest.mark.parametrize(
        "text, message",
        [("0 1 a", "line 1"), ("0 1\n1 1", "line 2: facet (1, 1) repeats a vertex"), ("0 -1", "non-negative")],
    )
    def test_parse_errors(self, text, message):
        with pytest.raises(ComplexException, match=message.replace("(", r"\(").replace(")", r"\)")) as e:
            parse_complex(text)
        assert e.value.exit_code == ERR_INVALID_USAGE

    def test_load_from_path(self, tmp_path):
        path = tmp_path / "edge.txt"
        path.write_text("0 1\n", encoding="utf-8")
        c = load_complex(path)
        assert c.f_vector == (2, 1)
        assert str(c) == "edge"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ComplexException):
            load_complex(tmp_path / "missing.txt")


class TestCochains:
    def test_of_validates(self, delta2):
        with pytest.raises(ComplexException):
            Cochain.of(delta2, 1, [(0, 1, 2)])
        with pytest.raises(ComplexException):
            Cochain.of(delta2, 1, [(0, 5)])

    def test_vector_round_trip(self, delta2, rng):
        x = Cochain.random(delta2, 1, rng)
        assert Cochain.from_vector(delta2, 1, x.to_vector()) == x

    def test_zeros_are_equal(self, delta2):
        assert Cochain.zero(delta2, 0) == Cochain.zero(delta2, 2)

    def test_addition(self, delta2):
        x = Cochain.of(delta2, 1, [(0, 1)])
        y = Cochain.of(delta2, 1, [(0, 1), (1, 2)])
        assert x + y == Cochain.of(delta2, 1, [(1, 2)])
        with pytest.raises(ComplexException):
            x + Cochain.of(delta2, 0, [(0,)])

    def test_coboundary_squares_to_zero(self, delta4, rng):
        for dim in range(4):
            x = Cochain.random(delta4, dim, rng)
            assert coboundary(coboundary(x)).is_zero()

    def test_coboundary_matches_matrix(self, rp2, rng):
        x = Cochain.random(rp2, 1, rng)
        assert np.array_equal(coboundary_matrix(rp2, 1).apply(x.to_vector()), coboundary(x).to_vector())


class TestEvaluate:
    def test_unit_acts_as_identity(self, delta2, rng):
        x = Cochain.random(delta2, 1, rng)
        assert evaluate(SurjChain.unit(), [x]) == x

    def test_front_and_back_faces(self, delta2):
        a = Cochain.of(delta2, 1, [(0, 1)])
        b = Cochain.of(delta2, 1, [(1, 2)])
        assert cup_i(a, b, 0) == Cochain.of(delta2, 2, [(0, 1, 2)])
        assert cup_i(b, a, 0).is_zero()

    @pytest.mark.parametrize("n", range(1, 6))
    def test_cup_string_matches_front_back_cup(self, n, rng):
        complex_ = load_complex(f"delta{n}")
        cup = SurjChain.of(2, [(1, 2)])
        for p in range(n + 1):
            for q in range(n - p + 1):
                for _ in range(5):
                    x = Cochain.random(complex_, p, rng)
                    y = Cochain.random(complex_, q, rng)
                    assert evaluate(cup, [x, y]) == front_back_cup(x, y), (p, q, str(x), str(y))

    def test_cup_is_associative(self, delta4, rng):
        for _ in range(20):
            x, y, z = (Cochain.random(delta4, int(rng.integers(0, 3)), rng) for _ in range(3))
            assert cup_i(cup_i(x, y, 0), z, 0) == cup_i(x, cup_i(y, z, 0), 0)

    def test_top_cup_is_square(self, delta2):
        x = Cochain.of(delta2, 1, [(0, 1), (1, 2)])
        assert cup_i(x, x, 1) == x

    def test_dimension_beyond_complex_is_zero(self, delta2):
        x = Cochain.of(delta2, 2, [(0, 1, 2)])
        assert cup_i(x, x, 0).is_zero()

    def test_arity_mismatch(self, delta2):
        x = Cochain.of(delta2, 0, [(0,)])
        with pytest.raises(ComplexException):
            evaluate(SurjChain.of(2, [(1, 2)]), [x])

    def test_target_dim_mismatch(self, delta2):
        x = Cochain.of(delta2, 0, [(0,)])
        with pytest.raises(ComplexException):
            evaluate(SurjChain.of(2, [(1, 2)]), [x, x], target_dim=1)

    def test_different_complexes(self, delta2, circle):
        with pytest.raises(ComplexException):
            evaluate(SurjChain.of(2, [(1, 2)]), [Cochain.of(delta2, 0, [(0,)]), Cochain.of(circle, 0, [(0,)])])

    def test_negative_i(self, delta2):
        x = Cochain.of(delta2, 0, [(0,)])
        with pytest.raises(SteenboltExitingException) as e:
            cup_i(x, x, -1)
        assert e.value.exit_code == ERR_INVALID_USAGE

    def test_chain_map(self, delta4, rng):
        report = check_cochain_chain_map(delta4, 500, rng)
        assert report.passed, report.dump()

    @pytest.mark.parametrize("i", range(0, 4))
    def test_steenrod_coboundary(self, delta4, rng, i):
        report = check_steenrod_coboundary(delta4, i, 100, rng)
        assert report.passed, report.dump()

    def test_steenrod_coboundary_on_rp2(self, rp2, rng):
        assert check_steenrod_coboundary(rp2, 1, 50, rng).passed


class TestCohomology:
    @pytest.mark.parametrize(
        "name, ranks",
        [("rp2", (1, 1, 1)), ("circle", (1, 1)), ("delta3", (1, 0, 0, 0)), ("delta1", (1, 0))],
    )
    def test_ranks(self, name, ranks):
        c = load_complex(name)
        assert tuple(cohomology_group(c, d).rank for d in range(len(ranks))) == ranks

    def test_representatives_are_cocycles(self, rp2):
        for d in range(3):
            for c in cohomology(rp2, d):
                assert coboundary(c.representative).is_zero()

    def test_basis_ids(self, rp2):
        (a,) = cohomology(rp2, 1)
        assert a.basis_id == 0

    def test_coboundaries_classify_to_zero(self, rp2, rng):
        group = cohomology_group(rp2, 1)
        x = Cochain.random(rp2, 0, rng)
        assert group.classify(coboundary(x)) == (0,)

    def test_classify_rejects_non_cocycles(self, delta2):
        group = cohomology_group(delta2, 1)
        with pytest.raises(ComplexException):
            group.classify(Cochain.of(delta2, 1, [(0, 1)]))


class TestSteenrodSquares:
    def test_sq1_on_rp2_is_iso(self, rp2):
        (a,) = cohomology(rp2, 1)
        square = steenrod_square(a, 1)
        assert square.coordinates == (1,)
        assert steenrod_matrix(rp2, 1, 1).entries.tolist() == [[1]]

    @pytest.mark.parametrize("name", ["circle", "rp2"])
    def test_sq0_is_identity(self, name):
        c = load_complex(name)
        n = cohomology_group(c, 1).rank
        assert steenrod_matrix(c, 1, 0) == steenrod_matrix(c, 1, 0).identity(n)

    def test_contractible(self, delta2):
        assert steenrod_matrix(delta2, 1, 1).entries.shape == (0, 0)

    def test_top_square_is_cup_square(self, rp2):
        (a,) = cohomology(rp2, 1)
        x = a.representative
        assert cohomology_group(rp2, 2).classify(cup_i(x, x, 0)) == steenrod_square(a, 1).coordinates

    @pytest.mark.parametrize("k", [-1, 2])
    def test_k_out_of_range(self, rp2, k):
        (a,) = cohomology(rp2, 1)
        with pytest.raises(SteenboltExitingException):
            steenrod_square(a, k)

    @pytest.mark.parametrize("name", ["circle", "rp2"])
    def test_independent_of_representative(self, name, rng):
        report = check_steenrod_well_defined(load_complex(name), 10, rng)
        assert report.passed, report.dump()
        assert dict(report.counts)["trials"] > 0

    def test_moved_representative_keeps_sq1_on_rp2(self, rp2, rng):
        (a,) = cohomology(rp2, 1)
        for _ in range(10):
            moved = a.representative + coboundary(Cochain.random(rp2, 0, rng))
            square = cup_i(moved, moved, 0)
            assert cohomology_group(rp2, 2).classify(square) == steenrod_square(a, 1).coordinates
