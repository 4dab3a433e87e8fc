import pytest

from kh_lib.base.exceptions import CrossingCapExceeded, GeneratorBudgetExceeded, MemoryBudgetExceeded
from kh_lib.base.kh_types import Algorithm, ResourceCaps
from kh_lib.base.polynomials import format_laurent
from kh_lib.cube import build_complex
from kh_lib.diagram import disjoint_union, mirror, parse_pd, set_basepoint, with_default_basepoint
from kh_lib.homology import (
    ENGINE_REGISTRY,
    BettiTable,
    DenseEngine,
    EngineFactory,
    ResourceGuard,
    ScanEngine,
    betti,
    mirror_table,
    poincare_polynomial,
    tensor_with_v,
)
from kh_lib.invariants import kauffman_jones

UNKNOT_TABLE = {(0, -1): 1, (0, 1): 1}
TREFOIL_TABLE = {(0, 1): 1, (0, 3): 1, (2, 5): 1, (2, 7): 1, (3, 7): 1, (3, 9): 1}
TREFOIL_REDUCED_TABLE = {(0, 2): 1, (2, 6): 1, (3, 8): 1}
HOPF_TABLE = {(-2, -6): 1, (-2, -4): 1, (0, -2): 1, (0, 0): 1}


@pytest.fixture
def dense():
    return DenseEngine()


class TestBettiTable:
    def test_zero_entries_are_dropped(self):
        table = BettiTable({(0, 1): 1, (1, 3): 0})
        assert table.ranks == {(0, 1): 1}
        assert table.rank(1, 3) == 0

    def test_negative_rank(self):
        with pytest.raises(ValueError):
            BettiTable({(0, 1): -1})

    def test_from_rows(self):
        table = BettiTable.from_rows([(0, 1, 1), (0, -1, 1), (0, 1, 2)])
        assert table.ranks == {(0, -1): 1, (0, 1): 3}
        assert table.rows() == [(0, -1, 1), (0, 1, 3)]

    def test_equality_with_mapping(self):
        assert BettiTable(UNKNOT_TABLE) == UNKNOT_TABLE
        assert BettiTable(UNKNOT_TABLE) != BettiTable(HOPF_TABLE)

    def test_poincare(self):
        assert BettiTable(UNKNOT_TABLE).format_poincare() == "q^-1 + q"
        assert BettiTable({(2, 5): 1, (0, 0): 2}).format_poincare() == "2 + t^2q^5"
        assert BettiTable().format_poincare() == "0"
        assert poincare_polynomial(BettiTable(TREFOIL_TABLE)) == TREFOIL_TABLE

    def test_tensor_with_v(self):
        assert tensor_with_v(BettiTable({(0, 0): 1})) == UNKNOT_TABLE
        assert BettiTable(TREFOIL_REDUCED_TABLE).tensor_with_v() == TREFOIL_TABLE

    def test_mirror_table(self):
        assert mirror_table(BettiTable({(2, 5): 1})) == {(-2, -5): 1}

    def test_euler(self):
        assert format_laurent(BettiTable(TREFOIL_TABLE).euler()) == "q + q^3 + q^5 - q^9"

    def test_degrees(self):
        table = BettiTable(TREFOIL_TABLE)
        assert table.homological_degrees == [0, 2, 3]
        assert table.quantum_degrees == [1, 3, 5, 7, 9]


class TestDenseHomology:
    def test_unknot(self, dense, unknot, kinked_unknot, twice_kinked_unknot):
        for d in (unknot, kinked_unknot, twice_kinked_unknot):
            assert dense.compute(d) == UNKNOT_TABLE

    def test_reduced_unknot(self, dense):
        assert dense.compute(parse_pd("U1 *1"), reduced=True) == {(0, 0): 1}

    def test_trefoil(self, dense, trefoil):
        assert dense.compute(trefoil) == TREFOIL_TABLE
        assert dense.compute(set_basepoint(trefoil, 1), reduced=True) == TREFOIL_REDUCED_TABLE

    def test_reduced_does_not_depend_on_basepoint(self, dense, trefoil):
        tables = [dense.compute(set_basepoint(trefoil, e), reduced=True) for e in trefoil.edges]
        assert all(t == TREFOIL_REDUCED_TABLE for t in tables)

    def test_hopf(self, dense, hopf):
        assert dense.compute(hopf) == HOPF_TABLE

    def test_figure_eight(self, dense, figure_eight):
        assert dense.compute(figure_eight).total == 10
        assert dense.compute(with_default_basepoint(figure_eight), reduced=True).total == 5

    def test_mirror(self, dense, trefoil, figure_eight):
        for d in (trefoil, figure_eight):
            assert dense.compute(mirror(d)) == dense.compute(d).mirror_table()

    def test_euler_is_jones(self, dense, trefoil, figure_eight, hopf):
        for d in (trefoil, figure_eight, hopf):
            assert dense.compute(d).euler() == kauffman_jones(d)

    def test_splitting(self, dense, trefoil, figure_eight, hopf):
        for d in (trefoil, figure_eight, hopf):
            reduced = dense.compute(with_default_basepoint(d), reduced=True)
            assert dense.compute(d) == reduced.tensor_with_v()

    def test_disjoint_union_with_unknot(self, dense, trefoil, unknot):
        assert dense.compute(disjoint_union(trefoil, unknot)) == BettiTable(TREFOIL_TABLE).tensor_with_v()

    def test_free_function(self, trefoil):
        assert betti(build_complex(trefoil)) == TREFOIL_TABLE

    def test_crossing_cap(self, trefoil):
        engine = DenseEngine(ResourceCaps(max_crossings=2))
        assert engine.crossing_cap == 2
        with pytest.raises(CrossingCapExceeded):
            engine.compute(trefoil)


class TestEngineFactory:
    def test_registry(self):
        assert set(ENGINE_REGISTRY) == {Algorithm.DENSE, Algorithm.SCAN}

    def test_from_algorithm(self):
        assert isinstance(EngineFactory.from_algorithm("dense"), DenseEngine)
        assert isinstance(EngineFactory.from_algorithm(Algorithm.SCAN), ScanEngine)

    def test_caps_are_passed(self):
        caps = ResourceCaps(max_crossings=4)
        assert EngineFactory.from_algorithm("scan", caps).caps is caps

    @pytest.mark.parametrize("algorithm", ["auto", "sparse", ""])
    def test_unsupported(self, algorithm):
        with pytest.raises(ValueError):
            EngineFactory.from_algorithm(algorithm)

    def test_auto(self, trefoil):
        assert EngineFactory.resolve("auto", trefoil) is Algorithm.DENSE
        assert EngineFactory.resolve("auto", trefoil, ResourceCaps(max_crossings=2)) is Algorithm.SCAN
        assert EngineFactory.resolve("scan", trefoil) is Algorithm.SCAN
        assert isinstance(EngineFactory.for_diagram("auto", trefoil), DenseEngine)


class TestResourceGuard:
    def test_generator_budget(self):
        guard = ResourceGuard(generator_budget=10)
        guard.check_generators(7)
        with pytest.raises(GeneratorBudgetExceeded, match="step 2"):
            guard.check_generators(11, "step 2")
        assert guard.peak_generators == 11

    def test_no_limits(self):
        guard = ResourceGuard()
        guard.check_generators(10 ** 9)
        guard.check_memory()

    def test_memory_budget(self):
        guard = ResourceGuard(memory_budget_mb=1)
        assert guard.memory_mb() > 1
        with pytest.raises(MemoryBudgetExceeded):
            guard.check_memory("tiny budget")

    def test_engine_guard_uses_caps(self):
        guard = DenseEngine(ResourceCaps(generator_budget=99, memory_budget_mb=512)).make_guard()
        assert (guard.generator_budget, guard.memory_budget_mb) == (99, 512)
