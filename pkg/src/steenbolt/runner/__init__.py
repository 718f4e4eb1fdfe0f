#!/usr/bin/env python3
# coding=utf-8

"""
Check runners to execute relation checks, serially or in worker processes.
"""

from steenbolt.runner.base import CheckRunner as CheckRunner
