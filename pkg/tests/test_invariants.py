import pytest
import sympy as sp

from kh_lib.base.exceptions import CrossingCapExceeded
from kh_lib.base.polynomials import A, format_laurent, from_terms, laurent_terms, q
from kh_lib.cable import seifert_framed_cable
from kh_lib.diagram import braid_closure, mirror, parse_pd
from kh_lib.homology import BettiTable
from kh_lib.invariants import (
    UNKNOT_POLY,
    determinant,
    determinant_check,
    graded_euler,
    kauffman_bracket,
    kauffman_jones,
    normalized_jones,
)


class TestPolynomials:
    def test_terms(self):
        assert laurent_terms((q + 1 / q) ** 2) == {-2: 1, 0: 2, 2: 1}
        assert laurent_terms(q - q) == {}
        assert laurent_terms(sp.Integer(5)) == {0: 5}

    def test_from_terms_adds_repeated_exponents(self):
        assert from_terms([(1, 1), (-1, 1), (1, 1)]) == 2 * q + 1 / q
        assert from_terms([(3, 2), (3, -2)]) == 0

    def test_other_variable(self):
        assert laurent_terms(-A ** 2 - A ** -2, A) == {-2: -1, 2: -1}

    @pytest.mark.parametrize("expr", [sp.sqrt(q), sp.I * q, q / 2, q + A])
    def test_rejects_non_laurent(self, expr):
        with pytest.raises(ValueError):
            laurent_terms(expr)

    def test_formatting(self):
        assert format_laurent(sp.Integer(0)) == "0"
        assert format_laurent((q + 1 / q) ** 2) == "q^-2 + 2 + q^2"
        assert format_laurent(-q ** 2 + 3) == "3 - q^2"
        assert format_laurent(-2 / A, A) == "-2A^-1"


class TestKauffmanBracket:
    def test_unknot(self, unknot):
        assert kauffman_bracket(unknot) == -A ** 2 - A ** -2
        assert kauffman_jones(unknot) == UNKNOT_POLY

    def test_trefoil(self, trefoil):
        assert format_laurent(kauffman_jones(trefoil)) == "q + q^3 + q^5 - q^9"

    def test_mirror_inverts_q(self, trefoil):
        assert format_laurent(kauffman_jones(mirror(trefoil))) == "-q^-9 + q^-5 + q^-3 + q^-1"

    def test_hopf(self, hopf):
        assert kauffman_jones(hopf) == 1 + q ** -2 + q ** -4 + q ** -6

    @pytest.mark.parametrize("name", ["kinked_unknot", "twice_kinked_unknot"])
    def test_reidemeister_one_invariance(self, request, name):
        assert kauffman_jones(request.getfixturevalue(name)) == UNKNOT_POLY

    def test_braid_closure_invariance(self, figure_eight):
        assert kauffman_jones(braid_closure([1, -2, 1, -2], 3)) == kauffman_jones(figure_eight)

    def test_unlink(self):
        assert kauffman_jones(parse_pd("U2")) == sp.expand(UNKNOT_POLY ** 2)

    def test_oracle_cap(self, trefoil):
        with pytest.raises(CrossingCapExceeded):
            kauffman_jones(trefoil, oracle_cap=2)


class TestDerivedInvariants:
    def test_graded_euler(self):
        assert graded_euler(BettiTable({(0, 1): 1, (0, -1): 1})) == UNKNOT_POLY
        assert graded_euler(BettiTable({(1, 3): 2})) == -2 * q ** 3

    def test_normalized(self, trefoil, figure_eight):
        assert normalized_jones(kauffman_jones(trefoil)) == q ** 2 + q ** 6 - q ** 8
        assert normalized_jones(UNKNOT_POLY) == 1
        assert normalized_jones(kauffman_jones(figure_eight)) == q ** -4 - q ** -2 + 1 - q ** 2 + q ** 4

    def test_normalized_rejects_indivisible(self):
        with pytest.raises(ValueError):
            normalized_jones(sp.Integer(1))
        with pytest.raises(ValueError):
            determinant(q ** 3)

    @pytest.mark.parametrize("name, det", [
        ("unknot", 1),
        ("kinked_unknot", 1),
        ("hopf", 2),
        ("trefoil", 3),
        ("mirror_trefoil", 3),
        ("figure_eight", 5),
    ])
    def test_determinant(self, request, name, det):
        assert determinant(kauffman_jones(request.getfixturevalue(name))) == det

    def test_determinant_of_two_cables_vanishes(self, unknot, kinked_unknot, figure_eight):
        for d in (unknot, kinked_unknot, figure_eight):
            cable = seifert_framed_cable(d, 2)
            assert determinant_check(cable, kauffman_jones(cable))

    def test_determinant_check_warns(self, trefoil, caplog):
        assert not determinant_check(trefoil, kauffman_jones(trefoil))
        assert "Determinant 3" in caplog.text
