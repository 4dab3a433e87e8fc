import pytest

from kh_lib.base.exceptions import InsertionLocusError, NotAKnotError
from kh_lib.cable import (
    CableSpec,
    blackboard_cable,
    cable_spec,
    full_twist_insertion,
    full_twist_word,
    seifert_framed_cable,
)
from kh_lib.diagram import linking_number, to_pd


def _pairwise_linking(d) -> list[int]:
    return [
        linking_number(d, a, b)
        for a in range(d.component_count)
        for b in range(a + 1, d.component_count)
    ]


class TestCableSpec:
    def test_properties(self):
        spec = CableSpec(n=2, twist_correction=-3)
        assert (spec.twist_sign, spec.twist_count, spec.added_crossings) == (-1, 3, 6)

    def test_no_twists(self):
        spec = CableSpec(n=3)
        assert spec.twist_sign == 1
        assert spec.added_crossings == 0

    def test_needs_a_strand(self):
        with pytest.raises(ValueError):
            CableSpec(n=0)

    def test_seifert_correction_is_minus_writhe(self, trefoil, twice_kinked_unknot):
        assert cable_spec(trefoil, 2) == CableSpec(n=2, twist_correction=-3)
        assert cable_spec(twice_kinked_unknot, 2).twist_correction == 2


def test_full_twist_word():
    assert full_twist_word(2) == [1, 1]
    assert full_twist_word(3, sign=-1) == [-1, -2] * 3
    assert len(full_twist_word(4, count=2)) == 2 * 4 * 3


class TestBlackboardCable:
    def test_trefoil(self, trefoil):
        cable = blackboard_cable(trefoil, 2)
        assert cable.crossing_count == 12
        assert cable.component_count == 2
        assert cable.writhe == 12
        assert len(cable.bundle) == 2
        assert cable.basepoint == cable.bundle[0]

    def test_blackboard_linking_is_writhe(self, trefoil):
        assert _pairwise_linking(blackboard_cable(trefoil, 2)) == [3]

    def test_unknot(self, unknot):
        cable = blackboard_cable(unknot, 2)
        assert to_pd(cable, include_basepoint=False) == "U2"
        assert cable.bundle == (1, 2)

    def test_single_copy_is_the_knot(self, figure_eight):
        cable = blackboard_cable(figure_eight, 1)
        assert cable.crossing_count == 4
        assert cable.writhe == figure_eight.writhe

    def test_rejects_links(self, hopf):
        with pytest.raises(NotAKnotError):
            blackboard_cable(hopf, 2)


class TestTwistInsertion:
    def test_needs_bundle(self, trefoil):
        with pytest.raises(InsertionLocusError):
            full_twist_insertion(trefoil, 2, 1, 1)

    def test_zero_twists_is_identity(self, trefoil):
        assert full_twist_insertion(trefoil, 2, 1, 0) is trefoil

    def test_bad_sign(self, trefoil):
        with pytest.raises(ValueError):
            full_twist_insertion(blackboard_cable(trefoil, 2), 2, 0, 1)

    def test_adds_crossings(self, trefoil):
        cable = blackboard_cable(trefoil, 3)
        twisted = full_twist_insertion(cable, 3, -1, 2)
        assert twisted.crossing_count == cable.crossing_count + 2 * 3 * 2
        assert twisted.component_count == 3

    def test_twists_on_free_loops(self, unknot):
        twisted = full_twist_insertion(blackboard_cable(unknot, 2), 2, 1, 1)
        assert twisted.crossing_count == 2
        assert twisted.num_free_loops == 0
        assert _pairwise_linking(twisted) == [1]


class TestSeifertFramedCable:
    @pytest.mark.parametrize("name, n, crossings", [
        ("trefoil", 2, 18),
        ("trefoil", 3, 45),
        ("figure_eight", 2, 16),
        ("kinked_unknot", 2, 6),
        ("twice_kinked_unknot", 2, 12),
    ])
    def test_crossing_count(self, request, name, n, crossings):
        d = request.getfixturevalue(name)
        assert seifert_framed_cable(d, n).crossing_count == crossings

    @pytest.mark.parametrize("name", ["trefoil", "figure_eight", "kinked_unknot", "mirror_trefoil"])
    def test_components_are_unlinked(self, request, name):
        d = request.getfixturevalue(name)
        for n in (2, 3):
            cable = seifert_framed_cable(d, n)
            assert cable.component_count == n
            assert all(lk == 0 for lk in _pairwise_linking(cable))

    def test_writhe(self, trefoil):
        # n**2 * w from the grid, minus n * (n - 1) * w from the twists
        assert seifert_framed_cable(trefoil, 2).writhe == 6
        assert seifert_framed_cable(trefoil, 3).writhe == 9

    def test_unknot(self, unknot):
        assert to_pd(seifert_framed_cable(unknot, 2), include_basepoint=False) == "U2"

    def test_keeps_basepoint(self, figure_eight):
        cable = seifert_framed_cable(figure_eight, 2)
        assert cable.basepoint is not None
        assert cable.basepoint in cable.edge_set

    def test_edges_are_consecutive(self, trefoil):
        cable = seifert_framed_cable(trefoil, 2)
        assert cable.edges == tuple(range(1, 2 * cable.crossing_count + 1))

    def test_rejects_links(self, hopf):
        with pytest.raises(NotAKnotError):
            seifert_framed_cable(hopf, 2)
