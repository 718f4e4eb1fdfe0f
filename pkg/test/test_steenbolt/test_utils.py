#!/usr/bin/env python3
# coding=utf-8

"""
Tests for merging check options.
"""

import pytest
from vt.utils.commons.commons.core_py import UNSET

from steenbolt.exceptions import SteenboltExitingException
from steenbolt.utils import merge_check_opts, resolve_opts, workers_from_env


class TestMergeCheckOpts:
    def test_primary_wins(self):
        assert merge_check_opts({"max_k": 3}, {"max_k": 2}) == {"max_k": 3}

    def test_none_falls_back(self):
        assert merge_check_opts({"max_arity": None}, {"max_arity": 4}) == {"max_arity": 4}

    def test_unset_is_retained(self):
        assert merge_check_opts({"workers": UNSET}, {"workers": 2})["workers"] is UNSET

    def test_false_is_not_missing(self):
        assert merge_check_opts({"unsafe_large": False}, {"unsafe_large": True}) == {"unsafe_large": False}

    def test_missing_everywhere(self):
        assert "timings" not in merge_check_opts({}, {"max_k": 1})


class TestWorkersFromEnv:
    @pytest.mark.parametrize("raw, expected", [("1", 1), (" 4 ", 4), ("", None)])
    def test_values(self, raw, expected):
        assert workers_from_env({"STEENBOLT_WORKERS": raw}) == expected

    @pytest.mark.parametrize("raw", ["0", "-2", "two"])
    def test_invalid(self, raw):
        with pytest.raises(SteenboltExitingException, match="STEENBOLT_WORKERS must be a positive integer"):
            workers_from_env({"STEENBOLT_WORKERS": raw})

    def test_reads_process_environment(self, monkeypatch):
        monkeypatch.setenv("STEENBOLT_WORKERS", "3")
        assert workers_from_env() == 3


class TestResolveOpts:
    def test_flags_over_environment(self):
        assert resolve_opts({"workers": 1}, {"STEENBOLT_WORKERS": "5"})["workers"] == 1

    def test_environment_over_defaults(self):
        assert resolve_opts({}, {"STEENBOLT_WORKERS": "5"})["workers"] == 5

    def test_defaults(self):
        opts = resolve_opts({}, {})
        assert (opts["max_k"], opts["max_arity"], opts["unsafe_large"], opts["timings"]) == (2, 3, False, False)
        assert opts["workers"] >= 1
