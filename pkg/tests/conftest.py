import random

import pytest

from tetrascreen._backend import Q
from tetrascreen.catalog import builtin_catalog
from tetrascreen.errors import DegenerateTriangle
from tetrascreen.triangle import TriangleSides


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()


def random_rational(rng, lo=1, hi=40, den=12):
    return Q(rng.randint(lo, hi), rng.randint(1, den))


def random_triangle(rng) -> TriangleSides:
    while True:
        try:
            return TriangleSides(random_rational(rng), random_rational(rng),
                                 random_rational(rng))
        except DegenerateTriangle:
            continue


@pytest.fixture
def rng():
    return random.Random(20200930)
