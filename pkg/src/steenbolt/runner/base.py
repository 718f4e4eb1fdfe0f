#!/usr/bin/env python3
# coding=utf-8

"""
Check runner interfaces.
"""

from __future__ import annotations

from abc import abstractmethod
from collections.abc import Sequence
from typing import Protocol

from steenbolt.models import CheckReport
from steenbolt.relations import Check


class CheckRunner(Protocol):
    """
    Interface to facilitate running a batch of checks.
    """

    @abstractmethod
    def run_checks(self, checks: Sequence[Check], workers: int | None = None) -> list[CheckReport]:
        """
        Run ``checks`` and return their reports in the order of ``checks``, whatever the number of workers.

        :param checks: zero-argument callables producing one report each.
        :param workers: worker processes; ``None`` or ``1`` runs in the calling process.
        :raises SteenboltException: when a check cannot be run.
        """
        ...
