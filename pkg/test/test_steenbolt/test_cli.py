#!/usr/bin/env python3
# coding=utf-8

"""
Tests for the ``steenbolt`` command line.
"""

import io

import pytest

from steenbolt.cli import main
from steenbolt.constants import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, FIXTURE_NAMES


def run(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    return main(list(argv), out), out.getvalue()


class TestGenerate:
    @pytest.mark.parametrize(
        "k, p, q, expected",
        [
            (0, 1, 1, "(1,2,1)"),
            (1, 1, 1, "(1,2,1,2)"),
            (0, 1, 2, "(1,2,1,3,1)"),
            (0, 2, 1, "0"),
        ],
    )
    def test_prints_chain(self, k, p, q, expected):
        assert run("generate", "--k", str(k), "--p", str(p), "--q", str(q)) == (EXIT_PASS, expected + "\n")

    def test_tables(self):
        code, text = run("generate", "--k", "0", "--p", "1", "--q", "2", "--tables")
        assert code == EXIT_PASS
        assert text.splitlines()[0] == "(1,2,1,3,1)"
        assert len(text.splitlines()) > 1

    def test_invalid_arguments(self, capsys):
        assert run("generate", "--k", "-1", "--p", "1", "--q", "1")[0] == EXIT_USAGE
        assert "steenbolt: error:" in capsys.readouterr().err


class TestCheck:
    def test_remark1(self):
        assert run("check", "remark1") == (EXIT_PASS, "REMARK1 PASS (identities=2)\n")

    def test_single_instance(self):
        code, text = run("check", "ehga", "--k", "1", "--m", "2", "--n", "2")
        assert code == EXIT_PASS
        assert text == "EHGA k=1 m=2 n=2 PASS (lhs_terms=0, rhs_terms=0)\n"

    def test_grid(self):
        code, text = run("check", "ehga", "--max-k", "1", "--max-arity", "2", "--workers", "1")
        assert code == EXIT_PASS
        assert len(text.splitlines()) == 8

    def test_guard(self):
        assert run("check", "ehga", "--k", "1", "--m", "9", "--n", "9")[0] == EXIT_USAGE

    def test_single_and_grid_conflict(self):
        assert run("check", "ehga", "--k", "1", "--max-k", "2")[0] == EXIT_USAGE

    def test_unknown_suite(self):
        assert run("check", "nope")[0] == EXIT_USAGE

    def test_timings(self):
        code, text = run("check", "g", "--timings")
        assert code == EXIT_PASS
        assert "millis=" in text

    def test_output_does_not_depend_on_workers(self):
        serial = run("check", "ehga", "--max-k", "1", "--max-arity", "2", "--workers", "1")
        pooled = run("check", "ehga", "--max-k", "1", "--max-arity", "2", "--workers", "2")
        assert serial == pooled


class TestChainCommands:
    def test_diff(self):
        assert run("diff", "(1,2,1,3,1)") == (EXIT_PASS, "(1,2,1,3) + (1,2,3,1) + (2,1,3,1)\n")

    def test_compose(self):
        assert run("compose", "(1,2,1)", "1", "(1,2)") == (EXIT_PASS, "(1,2,3,2) + (1,3,1,2)\n")

    def test_complexity(self):
        assert run("complexity", "(1,2,1,2) + (1,2)") == (EXIT_PASS, "3\n")

    def test_parse_error(self, capsys):
        assert run("diff", "(1,2) (2,1)")[0] == EXIT_USAGE
        assert "position 6" in capsys.readouterr().err

    def test_bad_slot(self):
        assert run("compose", "(1,2)", "3", "(1,2)")[0] == EXIT_USAGE


class TestSq:
    def test_rp2(self):
        code, text = run("sq", "--complex", "rp2", "--dim", "1", "--k", "1")
        assert code == EXIT_PASS
        lines = text.splitlines()
        assert lines[0] == "H^1(rp2): rank 1"
        assert "Sq^1: H^1 -> H^2 (nonzero)" in lines
        assert "Sq^1: [h1_0] -> [h2_0] (nonzero)" in lines

    def test_contractible(self):
        code, text = run("sq", "--complex", "delta2", "--dim", "1", "--k", "1")
        assert code == EXIT_PASS
        assert "Sq^1: H^1 -> H^2 (zero)" in text

    @pytest.mark.parametrize("k, line", [(0, "Sq^0: [h1_0] -> [h1_0] (nonzero)"), (1, "Sq^1: [h1_0] -> 0 (zero)")])
    def test_per_class_lines_on_the_circle(self, k, line):
        code, text = run("sq", "--complex", "circle", "--dim", "1", "--k", str(k))
        assert code == EXIT_PASS
        assert line in text.splitlines()

    def test_k_out_of_range(self):
        assert run("sq", "--complex", "rp2", "--dim", "1", "--k", "2")[0] == EXIT_USAGE

    def test_complex_file(self, tmp_path):
        path = tmp_path / "loop.txt"
        path.write_text("0 1\n1 2\n0 2\n", encoding="utf-8")
        code, text = run("sq", "--complex", str(path), "--dim", "1", "--k", "0")
        assert code == EXIT_PASS
        assert text.startswith("H^1(loop): rank 1\n")

    def test_missing_complex(self, tmp_path):
        assert run("sq", "--complex", str(tmp_path / "missing.txt"), "--dim", "1", "--k", "0")[0] == EXIT_USAGE


class TestBarCheck:
    def test_without_products(self):
        code, text = run("bar-check", "--complex", "delta1")
        assert code == EXIT_PASS
        assert [line.split()[0] for line in text.splitlines()] == ["BAR-DIFF", "HOPF"]

    def test_with_products(self):
        code, text = run("bar-check", "--complex", "circle", "--i", "1")
        assert code == EXIT_PASS
        assert [line.split()[0] for line in text.splitlines()] == [
            "BAR-DIFF",
            "HOPF",
            "STEENROD-BAR",
            "DECOMPOSITION",
        ]

    def test_length_guard(self):
        assert run("bar-check", "--complex", "delta1", "--max-len", "5")[0] == EXIT_USAGE


def test_fixtures():
    code, text = run("fixtures")
    assert code == EXIT_PASS
    lines = text.splitlines()
    assert [line.split()[0] for line in lines] == list(FIXTURE_NAMES)
    assert "rp2 6 15 10" in lines


def test_missing_command():
    assert run()[0] == EXIT_USAGE


def test_exit_statuses_are_distinct():
    assert len({EXIT_PASS, EXIT_FAIL, EXIT_USAGE}) == 3
