import itertools

import numpy as np
import pytest

from kh_lib.base.exceptions import (
    CrossingCapExceeded,
    ExitCode,
    GeneratorBudgetExceeded,
    MemoryBudgetExceeded,
    MissingBasepointError,
    ResolutionError,
)
from kh_lib.base.kh_types import Algorithm, Label, ResourceCaps
from kh_lib.cable import seifert_framed_cable
from kh_lib.cube import (
    EdgeMapKind,
    boundary_bytes,
    build_complex,
    chain_euler,
    edge_map,
    group_sizes,
    resolve,
    verify_square_zero,
)
from kh_lib.diagram import with_default_basepoint
from kh_lib.invariants import detect_unknot, kauffman_jones


class TestResolution:
    def test_hopf_circles(self, hopf):
        assert len(resolve(hopf, (0, 0)).circles) == 2
        assert len(resolve(hopf, (1, 0)).circles) == 1
        assert len(resolve(hopf, (1, 1)).circles) == 2

    def test_free_loops_are_circles(self):
        from kh_lib.diagram import parse_pd
        state = resolve(parse_pd("X[1,2,2,1] U1"), (0,))
        assert state.height == 0
        assert frozenset({3}) in state.circles

    def test_circle_of(self, trefoil):
        state = resolve(trefoil, (0, 0, 0))
        assert state.circle_of(1) == state.circle_index[1]

    def test_wrong_length(self, trefoil):
        with pytest.raises(ResolutionError):
            resolve(trefoil, (0, 1))

    def test_bad_choice(self, hopf):
        with pytest.raises(ResolutionError):
            resolve(hopf, (0, 2))


class TestEdgeMap:
    def test_merge(self, hopf):
        phi = edge_map(resolve(hopf, (0, 0)), resolve(hopf, (1, 0)))
        assert phi.kind is EdgeMapKind.MERGE
        assert phi((Label.ONE, Label.ONE)) == [(Label.ONE,)]
        assert phi((Label.ONE, Label.X)) == [(Label.X,)]
        assert phi((Label.X, Label.X)) == []

    def test_split(self, hopf):
        phi = edge_map(resolve(hopf, (1, 0)), resolve(hopf, (1, 1)))
        assert phi.kind is EdgeMapKind.SPLIT
        assert sorted(phi((Label.ONE,))) == [(Label.ONE, Label.X), (Label.X, Label.ONE)]
        assert phi((Label.X,)) == [(Label.X, Label.X)]

    def test_matrix_shape(self, hopf):
        phi = edge_map(resolve(hopf, (0, 0)), resolve(hopf, (0, 1)))
        m = phi.matrix()
        assert m.shape == (2, 4)
        assert m.dtype == np.uint8

    def test_not_adjacent(self, hopf):
        with pytest.raises(ResolutionError):
            edge_map(resolve(hopf, (0, 0)), resolve(hopf, (1, 1)))
        with pytest.raises(ResolutionError):
            edge_map(resolve(hopf, (1, 0)), resolve(hopf, (0, 0)))


class TestBuildComplex:
    def test_unknot(self, unknot):
        c = build_complex(unknot)
        assert c.bidegrees == [(0, -1), (0, 1)]
        assert c.total_dimension == 2

    def test_reduced_unknot(self):
        from kh_lib.diagram import parse_pd
        c = build_complex(parse_pd("U1 *1"), reduced=True)
        assert c.bidegrees == [(0, 0)]

    def test_reduced_needs_basepoint(self, trefoil):
        with pytest.raises(MissingBasepointError):
            build_complex(trefoil, reduced=True)

    def test_reduced_is_half(self, figure_eight):
        full = build_complex(figure_eight)
        reduced = build_complex(with_default_basepoint(figure_eight), reduced=True)
        assert 2 * reduced.total_dimension == full.total_dimension

    def test_crossing_cap(self, trefoil):
        with pytest.raises(CrossingCapExceeded):
            build_complex(trefoil, crossing_cap=2)

    def test_generator_budget(self, trefoil):
        with pytest.raises(GeneratorBudgetExceeded):
            build_complex(trefoil, generator_budget=5)

    @pytest.mark.parametrize("name", ["trefoil", "figure_eight", "hopf", "twice_kinked_unknot"])
    def test_square_zero(self, request, name):
        d = request.getfixturevalue(name)
        verify_square_zero(build_complex(d))
        verify_square_zero(build_complex(with_default_basepoint(d), reduced=True))

    def test_homological_range(self, trefoil, hopf):
        assert {i for i, _ in build_complex(trefoil).bidegrees} == {0, 1, 2, 3}
        assert {i for i, _ in build_complex(hopf).bidegrees} == {-2, -1, 0}

    def test_missing_boundary_is_zero(self, trefoil):
        c = build_complex(trefoil)
        assert not c.boundary(3, 9).any()

    @pytest.mark.parametrize("name", ["trefoil", "figure_eight", "hopf", "kinked_unknot"])
    def test_chain_euler_is_jones(self, request, name):
        d = request.getfixturevalue(name)
        assert chain_euler(build_complex(d)) == kauffman_jones(d)


class TestDenseSizing:
    @pytest.mark.parametrize("name, reduced", [
        ("trefoil", False),
        ("hopf", False),
        ("figure_eight", True),
    ])
    def test_group_sizes_match_complex(self, request, name, reduced):
        d = request.getfixturevalue(name)
        if reduced:
            d = with_default_basepoint(d)
        c = build_complex(d, reduced=reduced)
        assert group_sizes(d, c.states, reduced) == {b: c.dimension(*b) for b in c.bidegrees}

    def test_boundary_bytes(self, figure_eight):
        c = build_complex(figure_eight)
        sizes = {b: c.dimension(*b) for b in c.bidegrees}
        assert boundary_bytes(sizes) == sum(c.boundary(i, j).size for i, j in c.bidegrees)

    def test_figure_eight_cable_exceeds_memory_before_allocation(self, figure_eight):
        cable = seifert_framed_cable(figure_eight, 2)
        states = {s: resolve(cable, s) for s in itertools.product((0, 1), repeat=cable.crossing_count)}
        sizes = group_sizes(cable, states)
        assert sum(sizes.values()) == 1_169_316
        assert boundary_bytes(sizes) > 4096 << 20

        with pytest.raises(MemoryBudgetExceeded):
            build_complex(cable, crossing_cap=16, generator_budget=2_000_000, memory_budget_mb=4096)

    def test_dense_detection_stops_with_resource_limit(self, figure_eight):
        report = detect_unknot(figure_eight, algorithm=Algorithm.DENSE, caps=ResourceCaps(max_crossings=16))
        assert report.exit_code is ExitCode.RESOURCE_LIMIT
        assert "MiB" in report.error
        assert report.verdict is None
