import importlib

import orjson
import pytest

from rexlab.config import paths, settings
from rexlab.constants.calculi import CalculusId
from rexlab.oracles.joinability import joinable, peaks
from rexlab.oracles.schemas import VALIDATORS, PropertyReport, ReportStatus
from rexlab.terms.indexed import Index
from rexlab.utils.output import write_report


class TestJoinability:
    def test_a_term_joins_itself(self, ix):
        term = ix(r"(\ 1 1) (\ 1 1)")
        assert joinable(CalculusId.REX, term, term, depth=0)

    def test_peak_of_a_substituted_redex(self, ix):
        assert list(peaks(CalculusId.REX, ix(r"1[(\ 1) 2]"))) == [
            (ix(r"(\ 1) 2"), ix("1[1[2]]"))
        ]
        assert joinable(CalculusId.REX, ix(r"(\ 1) 2"), ix("1[1[2]]"), depth=3)

    def test_depth_bounds_the_search(self, ix):
        assert not joinable(CalculusId.REX, ix(r"(\ 1) 2"), ix("1[1[2]]"), depth=0)

    def test_distinct_normal_forms(self):
        assert not joinable(CalculusId.DB, Index(1), Index(2), depth=5)

    def test_modulo_classes_join_without_steps(self, ix):
        assert joinable(CalculusId.REX, ix("1[2][3]"), ix("2[4][1]"), depth=0)

    def test_normal_terms_have_no_peaks(self, ix):
        assert list(peaks(CalculusId.REX, ix(r"\ 1 2"))) == []


class TestPropertyReport:
    def test_record_failure(self):
        report = PropertyReport(property_id="cor1")
        report.record_failure({"law": "l", "a": "1"})
        assert report.status is ReportStatus.FAIL
        assert report.failures == 1
        assert not report.passed

    def test_counterexamples_are_capped(self, monkeypatch):
        monkeypatch.setattr(settings, "MAX_COUNTEREXAMPLES", 2)
        report = PropertyReport(property_id="cor1")
        for i in range(5):
            report.record_failure({"law": "l", "i": i})
        assert report.failures == 5
        assert [c["i"] for c in report.counterexamples] == [0, 1]

    def test_bound_does_not_hide_a_failure(self):
        report = PropertyReport(property_id="sim")
        report.record_failure({"law": "l"})
        report.record_bound({"law": "b"})
        assert report.status is ReportStatus.FAIL

    def test_merge_keeps_the_worst_status(self):
        first = PropertyReport(property_id="sim", universe=3)
        second = PropertyReport(property_id="sim", universe=4)
        second.record_bound({"law": "b"})
        merged = first.merge(second)
        assert merged.universe == 7
        assert merged.status is ReportStatus.BOUND_EXCEEDED
        assert merged.counterexamples == [{"law": "b"}]

    def test_dict_round_trip(self):
        report = PropertyReport(property_id="lemA", universe=10, elapsed=0.5)
        data = report.to_dict()
        assert data["status"] == "pass"
        assert PropertyReport.from_dict(data) == report

    def test_validate(self):
        report = PropertyReport(property_id="lemB", status=ReportStatus.FAIL)
        assert report.validate() == ["A failing report needs at least one counterexample"]

    def test_validators(self):
        assert VALIDATORS["reports"](PropertyReport(property_id="eqd").to_dict()) == (True, [])
        assert VALIDATORS["reports"]({"property_id": ""}) == (False, ["property_id is required"])
        ok, errors = VALIDATORS["reports"]({"colour": "blue"})
        assert not ok
        assert errors[0].startswith("Schema validation error")

    @pytest.mark.parametrize("data", [{}, {"calculus": "nope", "initial": "1"}])
    def test_trace_validator_rejects_garbage(self, data):
        ok, _ = VALIDATORS["traces"](data)
        assert not ok

    def test_trace_validator_checks_the_recorded_result(self):
        data = {
            "calculus": "re",
            "initial": r"(\ 1) 2",
            "steps": [{"rule": "Beta", "position": [], "after": "1[2]"}],
            "result": "2",
        }
        assert VALIDATORS["traces"](data) == (
            False,
            ["Recorded result differs from the last step"],
        )
        assert VALIDATORS["traces"]({**data, "result": "1[2]"}) == (True, [])


class TestWriteReport:
    def test_written_report_reads_back(self, report_dir):
        report = PropertyReport(property_id="lemA", universe=3)
        report.record_failure({"law": "l", "term": "1"})
        path = write_report(report, report_dir)
        assert path.parent == report_dir
        assert path.name.startswith("lemA-")
        assert PropertyReport.from_dict(orjson.loads(path.read_bytes())) == report

    def test_invalid_report_is_not_written(self, report_dir):
        report = PropertyReport(property_id="lemA", status=ReportStatus.FAIL)
        with pytest.raises(ValueError, match="at least one counterexample"):
            write_report(report, report_dir)
        assert not report_dir.exists()

    def test_report_directory_follows_the_environment(self, monkeypatch, tmp_path):
        monkeypatch.setenv("REXLAB_REPORT_DIR", str(tmp_path / "elsewhere"))
        try:
            assert importlib.reload(paths).REPORT_DIR == tmp_path / "elsewhere"
        finally:
            monkeypatch.undo()
            importlib.reload(paths)
