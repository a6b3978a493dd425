"""Shared fixtures and the hypothesis profile."""

import os

import pytest
from hypothesis import settings

import delrank as dr

settings.register_profile("default", deadline=None, max_examples=50)
settings.register_profile("thorough", deadline=None, max_examples=300)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def square():
    return dr.from_coords(2, [[0, 0], [1, 0], [0, 1], [1, 1]])


@pytest.fixture(scope="session")
def p0data():
    return dr.p0()
