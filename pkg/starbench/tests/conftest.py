"""Fixtures for starbench unit tests."""

import random

import pytest


@pytest.fixture
def rng():
    """Seeded generator; every test gets the same stream."""
    return random.Random(1729)
