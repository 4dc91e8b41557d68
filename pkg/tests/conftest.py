import random

import pytest

from cocycle_lab.groups import klein


@pytest.fixture
def G():
    return klein()


@pytest.fixture
def rng():
    return random.Random(0xC0C1C1E)
