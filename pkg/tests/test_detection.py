import pytest

import kh_lib.invariants.detection as detection_module
from kh_lib.base.exceptions import ExitCode, InvariantViolation, NotAKnotError, TheoremViolation
from kh_lib.base.kh_types import Algorithm, ResourceCaps, Verdict
from kh_lib.base.polynomials import q
from kh_lib.cable import blackboard_cable
from kh_lib.homology import BettiTable, EngineFactory
from kh_lib.invariants import (
    NONTRIVIAL_CABLE_RANK,
    UNKNOT_CABLE_RANK,
    UNKNOT_COLORED_RANK,
    DetectionReport,
    OracleCheck,
    colored_rank_interval,
    compute_report,
    detect_cable_ranks,
    detect_unknot,
    rank_splitting_check,
    verdict,
)

from .conftest import FixedEngine

CABLE_CHECKS = {"rank_doubling", "v_splitting", "linking_zero", "euler_vs_kauffman", "determinant_zero"}


class TestVerdict:
    def test_unknot(self):
        assert verdict(UNKNOT_CABLE_RANK) is Verdict.UNKNOT

    @pytest.mark.parametrize("rank", [NONTRIVIAL_CABLE_RANK, 14, 100])
    def test_nontrivial(self, rank):
        assert verdict(rank) is Verdict.NONTRIVIAL

    @pytest.mark.parametrize("rank", [0, 2, 5, 6, 8, 10, 13, 15])
    def test_forbidden(self, rank):
        assert verdict(rank) is Verdict.ERROR


class TestColoredInterval:
    def test_unknot_contains_colored_rank(self):
        lo, hi = colored_rank_interval(UNKNOT_CABLE_RANK)
        assert lo <= UNKNOT_COLORED_RANK <= hi

    def test_interval(self):
        assert colored_rank_interval(12) == (11, 13)

    def test_rejects_nonpositive_rank(self):
        with pytest.raises(ValueError):
            colored_rank_interval(0)


def test_rank_splitting_check():
    reduced = BettiTable({(0, 0): 1})
    assert rank_splitting_check(BettiTable({(0, 1): 1, (0, -1): 1}), reduced)
    assert not rank_splitting_check(BettiTable({(0, 1): 2}), reduced)


class TestReport:
    def test_finalize_ok(self):
        report = DetectionReport(name="x", verdict=Verdict.UNKNOT, checks=[OracleCheck("a", True)])
        assert report.finalize().exit_code is ExitCode.OK

    def test_forbidden_rank_is_invariant_violation(self):
        report = DetectionReport(name="x", verdict=Verdict.ERROR)
        assert report.finalize().exit_code is ExitCode.INVARIANT_VIOLATION

    def test_failed_check_is_invariant_violation(self):
        report = DetectionReport(name="x", checks=[OracleCheck("a", True), OracleCheck("b", False)])
        assert not report.all_checks_passed
        assert report.check("b") is False
        assert report.check("c") is None
        assert report.finalize().exit_code is ExitCode.INVARIANT_VIOLATION

    def test_finalize_keeps_error(self):
        report = DetectionReport(name="x", error="budget", exit_code=ExitCode.RESOURCE_LIMIT)
        assert report.finalize().exit_code is ExitCode.RESOURCE_LIMIT


class TestComputeReport:
    def test_trefoil(self, trefoil):
        report = compute_report(trefoil, "3_1")
        assert report.total_rank == 6
        assert report.reduced_rank is None
        assert report.check("euler_vs_kauffman") is True
        assert report.verdict is None
        assert report.exit_code is ExitCode.OK
        assert "homology" in report.timings_ms

    def test_reduced(self, trefoil):
        report = compute_report(trefoil, reduced=True, algorithm=Algorithm.SCAN)
        assert report.total_rank == report.reduced_rank == 3
        assert report.check("euler_vs_kauffman") is True

    def test_link(self, hopf):
        report = compute_report(hopf)
        assert report.total_rank == 4
        assert report.all_checks_passed

    def test_resource_limit_is_recorded(self, trefoil):
        report = compute_report(trefoil, algorithm="dense", caps=ResourceCaps(max_crossings=2))
        assert report.exit_code is ExitCode.RESOURCE_LIMIT
        assert report.error is not None
        assert report.total_rank is None

    def test_oracle_skipped_above_cap(self, trefoil, caplog):
        report = compute_report(trefoil, caps=ResourceCaps(oracle_cap=2))
        assert report.check("euler_vs_kauffman") is None
        assert "Skipping the Kauffman bracket oracle" in caplog.text


class TestDetection:
    def test_unknot(self, unknot):
        report = detect_unknot(unknot, "U")
        assert report.verdict is Verdict.UNKNOT
        assert report.cable_crossings == 0
        assert (report.total_rank, report.reduced_rank) == (4, 2)
        assert report.colored_interval == (3, 5)
        assert {c.name for c in report.checks} == CABLE_CHECKS
        assert report.all_checks_passed
        assert report.exit_code is ExitCode.OK

    def test_kinked_unknot(self, kinked_unknot):
        report = detect_unknot(kinked_unknot)
        assert report.cable_crossings == 6
        assert report.verdict is Verdict.UNKNOT
        assert report.total_rank == 4
        assert report.all_checks_passed

    def test_twice_kinked_unknot_by_scanning(self, twice_kinked_unknot):
        report = detect_unknot(twice_kinked_unknot, algorithm=Algorithm.SCAN)
        assert report.cable_crossings == 12
        assert report.verdict is Verdict.UNKNOT
        assert report.all_checks_passed

    def test_rejects_links(self, hopf):
        with pytest.raises(NotAKnotError):
            detect_unknot(hopf)

    def test_three_cable_has_no_verdict(self, unknot):
        report = detect_cable_ranks(unknot, n=3)
        assert report.cable_n == 3
        assert report.total_rank == 8
        assert report.verdict is None
        assert report.colored_interval is None
        assert report.check("determinant_zero") is None
        assert report.exit_code is ExitCode.OK

    def test_resource_limit(self, kinked_unknot):
        report = detect_unknot(kinked_unknot, algorithm=Algorithm.DENSE, caps=ResourceCaps(max_crossings=2))
        assert report.exit_code is ExitCode.RESOURCE_LIMIT
        assert report.verdict is None
        assert report.cable_crossings == 6

    def test_without_checks(self, kinked_unknot):
        report = detect_unknot(kinked_unknot, run_checks=False)
        assert report.checks == []
        assert report.verdict is Verdict.UNKNOT


@pytest.mark.slow
class TestNontrivialKnots:
    # unreduced and reduced ranks of the Seifert-framed 2-cable
    CABLE_RANKS = {"trefoil": (48, 24), "mirror_trefoil": (48, 24), "figure_eight": (100, 50)}

    @pytest.mark.parametrize("name", ["trefoil", "mirror_trefoil", "figure_eight"])
    def test_cable_ranks(self, request, name):
        d = request.getfixturevalue(name)
        report = detect_unknot(d, name, algorithm=Algorithm.SCAN)
        assert report.cable_crossings == 4 * d.crossing_count + 2 * abs(d.writhe)
        assert (report.total_rank, report.reduced_rank) == self.CABLE_RANKS[name]
        assert report.verdict is Verdict.NONTRIVIAL
        assert report.total_rank >= NONTRIVIAL_CABLE_RANK
        # every check ran, the Kauffman bracket of the cable included
        assert {c.name for c in report.checks} == CABLE_CHECKS
        assert report.all_checks_passed
        assert report.exit_code is ExitCode.OK

    def test_mirror_cable_tables_are_mirrored(self, trefoil, mirror_trefoil):
        tables = [detect_unknot(d, algorithm=Algorithm.SCAN).betti for d in (trefoil, mirror_trefoil)]
        assert tables[1] == tables[0].mirror_table()

    def test_blackboard_cable_scan_matches_dense(self, trefoil):
        cable = blackboard_cable(trefoil, 2)
        assert cable.crossing_count == 12
        caps = ResourceCaps(max_crossings=12)
        dense = compute_report(cable, algorithm=Algorithm.DENSE, caps=caps, run_checks=False)
        scan = compute_report(cable, algorithm=Algorithm.SCAN, caps=caps, run_checks=False)
        assert dense.exit_code is ExitCode.OK
        assert scan.betti == dense.betti


class TestViolations:
    @pytest.fixture
    def forbidden_rank(self, monkeypatch):
        table = BettiTable({(0, 1): 3, (0, -1): 3})
        monkeypatch.setattr(
            EngineFactory, "for_diagram", staticmethod(lambda algorithm, d, caps=None: FixedEngine(table))
        )

    def test_forbidden_rank_raises(self, unknot, forbidden_rank):
        with pytest.raises(TheoremViolation, match="rank 6"):
            detect_unknot(unknot, "U")

    def test_other_cables_have_no_forbidden_gap(self, unknot, forbidden_rank):
        report = detect_cable_ranks(unknot, n=3, run_checks=False)
        assert report.total_rank == 6
        assert report.verdict is None

    def test_jones_without_determinant(self, unknot, monkeypatch):
        monkeypatch.setattr(detection_module, "_jones_oracle", lambda d, caps: q ** 2)
        with pytest.raises(InvariantViolation, match="No determinant"):
            detect_unknot(unknot)

    def test_determinant_zero_uses_determinant_check(self, kinked_unknot, monkeypatch):
        seen = []

        def failing_check(d, p):
            seen.append(d.crossing_count)
            return False

        monkeypatch.setattr(detection_module, "determinant_check", failing_check)
        report = detect_unknot(kinked_unknot)
        assert seen == [6]
        assert report.check("determinant_zero") is False
        assert report.exit_code is ExitCode.INVARIANT_VIOLATION
