import pytest

from kh_lib.base.exceptions import (
    EdgeMultiplicityError,
    KnotTableError,
    OrientationError,
    PDSyntaxError,
    UnknownEdgeError,
)
from kh_lib.diagram import (
    Crossing,
    apply_braid_relation,
    braid_closure,
    disjoint_union,
    insert_cancelling_pair,
    linking_number,
    load_knot_table,
    mirror,
    parse_pd,
    random_knot_diagram,
    read_pd_source,
    relabel,
    set_basepoint,
    stabilize,
    to_pd,
    verify_signs,
    with_default_basepoint,
    writhe,
)


class TestParse:
    def test_trefoil(self, trefoil):
        assert trefoil.crossing_count == 3
        assert trefoil.component_count == 1
        assert trefoil.is_knot
        assert writhe(trefoil) == 3
        assert (trefoil.n_plus, trefoil.n_minus) == (3, 0)

    def test_figure_eight_is_amphichiral_diagram(self, figure_eight):
        assert figure_eight.crossing_count == 4
        assert figure_eight.is_knot
        assert figure_eight.writhe == 0

    def test_hopf(self, hopf):
        assert hopf.component_count == 2
        assert hopf.writhe == -2
        assert linking_number(hopf, 0, 1) == -1

    def test_kinked_unknots(self, kinked_unknot, twice_kinked_unknot):
        assert kinked_unknot.writhe == 1
        assert twice_kinked_unknot.writhe == -2
        assert twice_kinked_unknot.is_knot

    def test_free_loops(self):
        d = parse_pd("U2")
        assert d.crossing_count == 0
        assert d.component_count == 2
        assert d.free_loop_ids == (1, 2)
        assert to_pd(d) == "U2"

    def test_basepoint_on_free_loop(self):
        assert parse_pd("U1 *1").basepoint == 1

    def test_sign_of_positive_crossing(self, trefoil):
        c = trefoil.crossings[0]
        assert c.sign == 1
        assert c.under == (1, 2)
        assert c.over == (4, 5)

    @pytest.mark.parametrize("text, error", [
        ("", PDSyntaxError),
        ("X[1,2,3]", PDSyntaxError),
        ("X[0,1,1,0]", PDSyntaxError),
        ("Y7", PDSyntaxError),
        ("U2 *1 *2", PDSyntaxError),
        ("X[1,2,3,4]", EdgeMultiplicityError),
        ("X[1,3,2,4] X[1,4,2,3]", OrientationError),
        ("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] *99", UnknownEdgeError),
    ])
    def test_malformed_input(self, text, error):
        with pytest.raises(error):
            parse_pd(text)

    def test_serialization_round_trip(self, pd_codes):
        for text in pd_codes.values():
            d = parse_pd(text)
            assert parse_pd(to_pd(d)) == d

    def test_basepoint_is_serialized(self, trefoil):
        marked = set_basepoint(trefoil, 3)
        assert to_pd(marked).endswith("*3")
        assert to_pd(marked, include_basepoint=False) == to_pd(trefoil)

    def test_signs_agree_with_propagation(self, trefoil, figure_eight, hopf):
        assert all(verify_signs(d) for d in (trefoil, figure_eight, hopf))


class TestCrossing:
    def test_invalid_sign(self):
        with pytest.raises(ValueError):
            Crossing((1, 2, 3, 4), 0)

    def test_smoothings(self):
        c = Crossing((1, 4, 2, 5), 1)
        assert c.smoothing(0) == ((1, 5), (4, 2))
        assert c.smoothing(1) == ((1, 4), (2, 5))

    def test_mirrored_twice_is_identity(self):
        c = Crossing((1, 4, 2, 5), 1)
        assert c.mirrored().sign == -1
        assert c.mirrored().mirrored() == c


class TestTransformations:
    def test_mirror_negates_writhe(self, trefoil, figure_eight):
        assert mirror(trefoil).writhe == -3
        assert mirror(figure_eight).writhe == 0
        assert mirror(mirror(trefoil)) == trefoil

    def test_mirror_keeps_components(self, hopf):
        assert mirror(hopf).component_count == 2
        assert linking_number(mirror(hopf), 0, 1) == 1

    def test_disjoint_union(self, trefoil, hopf):
        d = disjoint_union(trefoil, hopf)
        assert d.crossing_count == 5
        assert d.component_count == 3
        assert d.writhe == 1

    def test_disjoint_union_of_loops(self, unknot):
        assert to_pd(disjoint_union(unknot, unknot)) == "U2"

    def test_disjoint_union_moves_loop_basepoint(self, trefoil):
        d = disjoint_union(parse_pd("U1 *1"), trefoil)
        assert d.basepoint in d.free_loop_ids

    def test_set_basepoint_unknown_edge(self, trefoil):
        with pytest.raises(UnknownEdgeError):
            set_basepoint(trefoil, 42)

    def test_default_basepoint(self, trefoil):
        assert with_default_basepoint(trefoil).basepoint == 1
        assert with_default_basepoint(set_basepoint(trefoil, 4)).basepoint == 4

    def test_relabel_is_consecutive(self, figure_eight):
        d = relabel(figure_eight)
        assert d.edges == tuple(range(1, 9))
        assert d.writhe == figure_eight.writhe
        assert d.components == (tuple(range(1, 9)),)

    def test_component_of(self, hopf):
        assert hopf.component_of(1) != hopf.component_of(3)
        with pytest.raises(UnknownEdgeError):
            hopf.component_of(17)

    def test_linking_number_needs_two_components(self, hopf):
        with pytest.raises(ValueError):
            linking_number(hopf, 0, 0)
        with pytest.raises(ValueError):
            linking_number(hopf, 0, 5)


class TestBraids:
    def test_trefoil_closure(self):
        d = braid_closure([1, 1, 1], 2)
        assert (d.crossing_count, d.component_count, d.writhe) == (3, 1, 3)

    def test_figure_eight_closure(self):
        d = braid_closure([1, -2, 1, -2], 3)
        assert d.is_knot
        assert d.writhe == 0

    def test_trivial_braid_closes_to_unlink(self):
        d = braid_closure([], 3)
        assert d.crossing_count == 0
        assert d.num_free_loops == 3

    def test_generator_out_of_range(self):
        with pytest.raises(ValueError):
            braid_closure([3], 3)

    def test_random_knots_are_seeded(self):
        assert random_knot_diagram(seed=7) == random_knot_diagram(seed=7)
        assert random_knot_diagram(seed=7).is_knot

    def test_random_knots_from_generator(self, rng):
        for _ in range(5):
            assert random_knot_diagram(rng=rng).is_knot

    def test_braid_moves(self):
        assert insert_cancelling_pair([1, 1], 1, 2) == [1, 2, -2, 1]
        assert apply_braid_relation([1, 2, 1]) == [2, 1, 2]
        assert apply_braid_relation([1, 1]) is None
        assert stabilize([1, 1, 1], 2, -1) == ([1, 1, 1, -2], 3)


class TestKnotTable:
    def test_bundled_table(self):
        rows = load_knot_table()
        names = [row.name for row in rows]
        assert names[:3] == ["unknot_0", "unknot_1", "unknot_2"]
        assert "3_1" in names
        assert not any(row.expensive for row in rows)

    def test_expensive_rows(self):
        everything = load_knot_table(include_expensive=True)
        assert len(everything) > len(load_knot_table())
        assert any(row.name == "5_1" for row in everything)

    def test_hopf_row_declares_two_components(self):
        hopf = next(row for row in load_knot_table() if row.name == "hopf")
        assert hopf.components == 2
        assert hopf.diagram().component_count == 2

    def test_malformed_line_names_line_number(self, tmp_path):
        table = tmp_path / "table.jsonl"
        table.write_text('{"name": "u", "pd": "U1"}\nnot json\n', encoding="utf-8")
        with pytest.raises(KnotTableError, match=":2:"):
            load_knot_table(table)

    def test_missing_fields(self, tmp_path):
        table = tmp_path / "table.jsonl"
        table.write_text('{"name": "u"}\n', encoding="utf-8")
        with pytest.raises(KnotTableError):
            load_knot_table(table)

    def test_missing_file(self, tmp_path):
        with pytest.raises(KnotTableError):
            load_knot_table(tmp_path / "absent.jsonl")


class TestPDSource:
    def test_plain_string(self):
        assert read_pd_source("U1") == "U1"

    def test_file(self, tmp_path):
        source = tmp_path / "knot.pd"
        source.write_text("X[1,2,2,1]\n", encoding="utf-8")
        assert read_pd_source(f"@{source}") == "X[1,2,2,1]"

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(PDSyntaxError):
            read_pd_source(f"@{tmp_path / 'absent.pd'}")
