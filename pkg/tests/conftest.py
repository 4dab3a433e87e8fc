import numpy as np
import pytest

from kh_lib import parse_pd

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
MIRROR_TREFOIL = "X[4,2,5,1] X[6,4,1,3] X[2,6,3,5]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
HOPF = "X[1,3,2,4] X[3,1,4,2]"
KINKED_UNKNOT = "X[1,2,2,1]"
TWICE_KINKED_UNKNOT = "X[1,3,2,2] X[3,1,4,4]"

RNG_SEED = 12345


class FixedEngine:
    """Engine returning one Betti table for every diagram."""

    def __init__(self, table):
        self.table = table

    def compute(self, d, reduced=False):
        return self.table


@pytest.fixture
def pd_codes() -> dict[str, str]:
    """PD strings of the small diagrams used throughout the suite."""
    return {
        "unknot": "U1",
        "kinked_unknot": KINKED_UNKNOT,
        "twice_kinked_unknot": TWICE_KINKED_UNKNOT,
        "hopf": HOPF,
        "trefoil": TREFOIL,
        "mirror_trefoil": MIRROR_TREFOIL,
        "figure_eight": FIGURE_EIGHT,
    }


@pytest.fixture
def unknot():
    return parse_pd("U1")


@pytest.fixture
def kinked_unknot():
    return parse_pd(KINKED_UNKNOT)


@pytest.fixture
def twice_kinked_unknot():
    return parse_pd(TWICE_KINKED_UNKNOT)


@pytest.fixture
def hopf():
    return parse_pd(HOPF)


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture
def mirror_trefoil():
    return parse_pd(MIRROR_TREFOIL)


@pytest.fixture
def figure_eight():
    return parse_pd(FIGURE_EIGHT)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so randomized tests are reproducible."""
    return np.random.default_rng(RNG_SEED)
