#!/usr/bin/env python3
# coding=utf-8

"""
Constants related to steenbolt.
"""

from typing import Final

WORKERS_ENV_VAR: Final = "STEENBOLT_WORKERS"
"""
Environment variable holding the number of worker processes used to run check suites.
"""

# region guards
MAX_GENERATOR_LENGTH: Final = 64
"""
Longest surjection string ``2(p+q)+k-1`` that ``generate`` builds without ``--unsafe-large``.
"""

MAX_CHECK_K: Final = 5
MAX_CHECK_ARITY: Final = 8
"""
Largest ``m+n`` accepted by relation checks without ``--unsafe-large``.
"""

MAX_BAR_LENGTH: Final = 4
# endregion

# region chain grammar
ZERO_CHAIN: Final = "0"
TERM_SEP: Final = " + "
ROW_SEP: Final = ";"
# endregion

# region exit statuses
EXIT_PASS: Final = 0
EXIT_FAIL: Final = 1
EXIT_USAGE: Final = 2
# endregion

FIXTURE_NAMES: Final = (
    "circle",
    "delta1",
    "delta2",
    "delta3",
    "delta4",
    "delta5",
    "rp2",
)
"""
Bundled complexes, available by name wherever a complex path is accepted.
"""
