from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cmtensor import PolyRing, Polynomial, PrimeField

FIELD = PrimeField()


@pytest.fixture(scope="session")
def field():
    return FIELD


@pytest.fixture
def ring_xy():
    return PolyRing(("x", "y"), FIELD)


@pytest.fixture
def ring_xyz():
    return PolyRing(("x", "y", "z"), FIELD)


def random_poly(rng: random.Random, ring: PolyRing, max_deg=3, max_terms=3,
                homogeneous=False, constant_free=False):
    """A random sparse polynomial, possibly zero."""
    n = ring.nvars
    terms = {}
    deg = rng.randint(1 if constant_free else 0, max_deg)
    for _ in range(rng.randint(1, max_terms)):
        d = deg if homogeneous else rng.randint(1 if constant_free else 0, max_deg)
        exps = [0] * n
        for _ in range(d):
            exps[rng.randrange(n)] += 1
        terms[tuple(exps)] = rng.randrange(1, ring.field.p)
    return Polynomial(ring, terms)
