#!/usr/bin/env python3
# coding=utf-8

"""
Third-party importable pytest plugins for ``steenbolt``.
"""

import numpy as np
import pytest

from steenbolt.simplicial import SimplicialComplex, load_complex


@pytest.fixture
def delta2() -> SimplicialComplex:
    return load_complex("delta2")


@pytest.fixture
def delta4() -> SimplicialComplex:
    return load_complex("delta4")


@pytest.fixture
def circle() -> SimplicialComplex:
    return load_complex("circle")


@pytest.fixture
def rp2() -> SimplicialComplex:
    """
    The six-vertex real projective plane.
    """
    return load_complex("rp2")


@pytest.fixture
def rng() -> np.random.Generator:
    """
    A seeded generator, so random cochain trials repeat from run to run.
    """
    return np.random.default_rng(20240521)
