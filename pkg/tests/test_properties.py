import numpy as np
import pytest

from kh_lib.cube import build_complex, verify_square_zero
from kh_lib.diagram import (
    apply_braid_relation,
    braid_closure,
    insert_cancelling_pair,
    mirror,
    parse_pd,
    random_braid_diagram,
    random_braid_word,
    random_knot_diagram,
    set_basepoint,
    stabilize,
    to_pd,
    with_default_basepoint,
)
from kh_lib.homology import DenseEngine, ScanEngine

from .conftest import RNG_SEED

CASES = range(40)


def case_rng(case: int) -> np.random.Generator:
    return np.random.default_rng([RNG_SEED, case])


def random_word(rng: np.random.Generator, min_strands: int = 2) -> tuple[list[int], int]:
    strands = int(rng.integers(min_strands, 5))
    return random_braid_word(rng, strands, int(rng.integers(0, 6))), strands


@pytest.fixture(scope="module")
def dense():
    return DenseEngine()


@pytest.fixture(scope="module")
def scan():
    return ScanEngine()


@pytest.mark.parametrize("case", CASES)
class TestRandomDiagrams:
    def test_square_zero(self, case):
        d, _, _ = random_braid_diagram(max_crossings=7, rng=case_rng(case))
        verify_square_zero(build_complex(d))
        verify_square_zero(build_complex(with_default_basepoint(d), reduced=True))

    def test_scan_matches_dense(self, dense, scan, case):
        d, _, _ = random_braid_diagram(max_crossings=7, rng=case_rng(case))
        assert scan.compute(d) == dense.compute(d)
        marked = with_default_basepoint(d)
        assert scan.compute(marked, reduced=True) == dense.compute(marked, reduced=True)

    def test_mirror(self, scan, case):
        d, _, _ = random_braid_diagram(max_crossings=7, rng=case_rng(case))
        assert scan.compute(mirror(d)) == scan.compute(d).mirror_table()

    def test_pd_round_trip(self, case):
        d = random_knot_diagram(max_crossings=7, rng=case_rng(case))
        assert parse_pd(to_pd(d)) == d
        marked = with_default_basepoint(d)
        assert parse_pd(to_pd(marked)) == marked


@pytest.mark.slow
@pytest.mark.parametrize("case", CASES)
class TestReidemeisterInvariance:
    def test_cancelling_pair(self, scan, case):
        rng = case_rng(case)
        word, strands = random_word(rng)
        generator = int(rng.integers(1, strands)) * int(rng.choice((-1, 1)))
        index = int(rng.integers(0, len(word) + 1))
        moved = insert_cancelling_pair(word, index, generator)
        assert scan.compute(braid_closure(moved, strands)) == scan.compute(braid_closure(word, strands))

    def test_braid_relation(self, scan, case):
        rng = case_rng(case)
        word, strands = random_word(rng, min_strands=3)
        i = int(rng.integers(1, strands - 1))
        s = int(rng.choice((-1, 1)))
        index = int(rng.integers(0, len(word) + 1))
        word = word[:index] + [s * i, s * (i + 1), s * i] + word[index:]
        moved = apply_braid_relation(word)
        assert moved is not None
        assert moved != word
        assert scan.compute(braid_closure(moved, strands)) == scan.compute(braid_closure(word, strands))

    def test_stabilization(self, scan, case):
        rng = case_rng(case)
        word, strands = random_word(rng)
        moved, more_strands = stabilize(word, strands, int(rng.choice((-1, 1))))
        assert scan.compute(braid_closure(moved, more_strands)) == scan.compute(braid_closure(word, strands))

    def test_reduced_basepoint_independence(self, scan, case):
        d = random_knot_diagram(max_crossings=7, rng=case_rng(case))
        tables = [scan.compute(set_basepoint(d, e), reduced=True) for e in d.edges]
        assert all(table == tables[0] for table in tables)
