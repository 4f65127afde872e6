import random

import pytest
from hypothesis import settings

from rootfiring.rootsys import build

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL = ["A1", "A2", "B2", "G2", "A3", "B3", "C3"]
RANK2 = ["A2", "B2", "G2"]


@pytest.fixture
def rng():
    return random.Random(20240611)


def system(label):
    return build(label)


def small_dominant(s, bound=2):
    """Dominant weights whose simple-root coordinates are all at most ``bound``."""
    import itertools
    out = []
    for lam in itertools.product(range(2 * bound + 1), repeat=s.rank):
        if all(x <= bound for x in s.root_coords(lam)):
            out.append(lam)
    return out
