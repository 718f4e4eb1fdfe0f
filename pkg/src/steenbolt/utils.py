#!/usr/bin/env python3
# coding=utf-8

"""
Utility functions related to merging check options from flags, environment and defaults.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Mapping

from vt.utils.commons.commons.core_py import UNSET, not_none_not_unset
from vt.utils.errors.error_specs import ERR_INVALID_USAGE

from steenbolt.constants import WORKERS_ENV_VAR
from steenbolt.exceptions import SteenboltExitingException
from steenbolt.models import CheckGridOpts

logger = logging.getLogger(__name__)


def merge_check_opts(primary: CheckGridOpts, fallback: CheckGridOpts) -> CheckGridOpts:
    """
    Merge the ``primary`` and ``fallback`` ``CheckGridOpts`` and return a new ``CheckGridOpts``.

    * values from ``primary`` are prioritized.
    * a ``None`` in ``primary`` falls back on ``fallback``.
    * an ``UNSET`` in ``primary`` is retained and does not fall back.

    >>> merge_check_opts({"max_k": 3, "workers": None}, {"max_k": 2, "workers": 4})
    {'max_k': 3, 'workers': 4}
    >>> merge_check_opts({}, {})
    {}
    >>> merge_check_opts({"timings": False}, {"timings": True})["timings"]
    False
    >>> merge_check_opts({"workers": UNSET}, {"workers": 4})["workers"] is UNSET
    True
    """
    merged: dict[str, object] = {}
    for k in CheckGridOpts.__annotations__:
        val = primary.get(k)  # type: ignore[misc] # k is a key of the typed dict
        if val is None:
            val = fallback.get(k)  # type: ignore[misc] # k is a key of the typed dict
        if val is not None:
            merged[k] = val
    return merged  # type: ignore[return-value] # keys come from CheckGridOpts


def workers_from_env(environ: Mapping[str, str] | None = None) -> int | None:
    """
    Worker count from the ``STEENBOLT_WORKERS`` environment variable.

    >>> workers_from_env({"STEENBOLT_WORKERS": "3"})
    3
    >>> workers_from_env({}) is None
    True
    >>> workers_from_env({"STEENBOLT_WORKERS": "many"})
    Traceback (most recent call last):
    steenbolt.exceptions.SteenboltExitingException: ValueError: STEENBOLT_WORKERS must be a positive integer, got 'many'.
    """
    env = os.environ if environ is None else environ
    raw = env.get(WORKERS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return None
    if not raw.strip().isdigit() or int(raw) < 1:
        errmsg = f"{WORKERS_ENV_VAR} must be a positive integer, got {raw!r}."
        raise SteenboltExitingException(errmsg, exit_code=ERR_INVALID_USAGE) from ValueError(errmsg)
    return int(raw)


def resolve_opts(flags: CheckGridOpts, environ: Mapping[str, str] | None = None) -> CheckGridOpts:
    """
    Flags first, then the environment, then defaults.

    >>> opts = resolve_opts({"max_k": None}, {})
    >>> opts["max_k"], opts["max_arity"], opts["unsafe_large"], opts["timings"], opts["workers"] >= 1
    (2, 3, False, False, True)
    >>> resolve_opts({"workers": None}, {"STEENBOLT_WORKERS": "2"})["workers"]
    2
    """
    env_opts: CheckGridOpts = {"workers": workers_from_env(environ)}
    defaults: CheckGridOpts = {
        "max_k": 2,
        "max_arity": 3,
        "workers": os.cpu_count() or 1,
        "unsafe_large": False,
        "timings": False,
    }
    merged = merge_check_opts(merge_check_opts(flags, env_opts), defaults)
    for key, value in merged.items():
        if not not_none_not_unset(value):
            logger.debug("option %s left unset", key)
    return merged
