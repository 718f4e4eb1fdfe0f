#!/usr/bin/env python3
# coding=utf-8

"""
The mod-2 surjection operad, the multioperations ``E^k_{p,q}``, exact checks of their relations, their action on
simplicial cochains and the Steenrod ``⌣_i`` products they induce on bar constructions.
"""

# region imports
# region operad related imports
from steenbolt.surjection import Surjection as Surjection
from steenbolt.surjection import SurjChain as SurjChain
from steenbolt.surjection import ValuePermutation as ValuePermutation
from steenbolt.surjection import parse_chain as parse_chain
from steenbolt.surjection import print_chain as print_chain
from steenbolt.surjection import differential as differential
from steenbolt.surjection import compose as compose
from steenbolt.surjection import relabel as relabel
from steenbolt.surjection import complexity as complexity
from steenbolt.generators import generator as generator
from steenbolt.generators import admissible_tables as admissible_tables
# endregion

# region checks related imports
from steenbolt.models import CheckReport as CheckReport
from steenbolt.relations import check_ehga as check_ehga
from steenbolt.relations import suite_checks as suite_checks
from steenbolt.runner import CheckRunner as CheckRunner
# endregion

# region cochain related imports
from steenbolt.simplicial import SimplicialComplex as SimplicialComplex
from steenbolt.simplicial import Cochain as Cochain
from steenbolt.simplicial import load_complex as load_complex
from steenbolt.simplicial import cup_i as cup_i
from steenbolt.simplicial import steenrod_square as steenrod_square
from steenbolt.bar import BarWord as BarWord
from steenbolt.bar import bar_basis as bar_basis
from steenbolt.bar import cup_bar as cup_bar
# endregion
# endregion


def get_runner() -> CheckRunner:
    """
    Get the default ``CheckRunner``.

    >>> import steenbolt
    >>> reports = steenbolt.get_runner().run_checks(steenbolt.suite_checks("remark1"))
    >>> [r.certificate() for r in reports]
    ['REMARK1 PASS (identities=2)']
    """
    from steenbolt.runner.simple_impl import SimpleCheckRunner

    return SimpleCheckRunner()
