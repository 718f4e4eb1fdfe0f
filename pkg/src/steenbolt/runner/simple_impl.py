#!/usr/bin/env python3
# coding=utf-8

"""
A simple and straight-forward check runner implementation on a process pool.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import override

from steenbolt.exceptions import SteenboltException
from steenbolt.models import CheckReport
from steenbolt.relations import Check
from steenbolt.runner.base import CheckRunner

logger = logging.getLogger(__name__)


def _invoke(check: Check) -> CheckReport:
    return check()


class SimpleCheckRunner(CheckRunner):
    """
    Runs every check as-is, in the calling process or mapped over a ``ProcessPoolExecutor``.

    >>> from functools import partial
    >>> from steenbolt.relations import check_ehga
    >>> reports = SimpleCheckRunner().run_checks([partial(check_ehga, 0, 1, 2)])
    >>> [r.certificate() for r in reports]
    ['EHGA k=0 m=1 n=2 PASS (lhs_terms=0, rhs_terms=0)']
    """

    @override
    def run_checks(self, checks: Sequence[Check], workers: int | None = None) -> list[CheckReport]:
        if workers is None or workers <= 1 or len(checks) <= 1:
            logger.debug("running %d checks in process", len(checks))
            return [_invoke(check) for check in checks]
        logger.debug("running %d checks on %d workers", len(checks), workers)
        try:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                return list(pool.map(_invoke, checks))
        except SteenboltException:
            raise
        except Exception as e:
            raise SteenboltException(f"check worker failed: {e}") from e
