"""Tests for the output handlers and the report renderer"""

import io
import json

import pytest

from app.census import exact_distribution
from app.handlers import get_handler
from app.experiment import Report
from app.render import ReportRenderer
from app.settings import reset_settings


class RaggedReport(Report):
    kind: str = "ragged"

    def csv_table(self):
        return ["a", "b"], [[1]]


@pytest.fixture
def census(cube_f3):
    return exact_distribution(cube_f3, 2)


def test_json_keeps_exact_values(census):
    data = json.loads(get_handler("json").format(census))
    assert data["kind"] == "census"
    assert data["E_X"] == {"exact": "4/9", "value": 0.444444}
    assert data["bound_violations"] is None


def test_json_uses_field_aliases(cube_f3):
    from app.factorpat import profile

    data = json.loads(get_handler("json").format(profile(cube_f3)))
    assert data["lambda"] == [3, 0, 0]


def test_csv_rows(census):
    text = get_handler("csv").format(census)
    assert text.splitlines() == ["i,B_i,union_from_i", "0,6,9", "1,2,3", "2,1,1"]


def test_csv_flattens_single_row_reports():
    class Flat(Report):
        kind: str = "flat"
        ok: bool = True
        missing: object = None

    text = get_handler("csv").format(Flat())
    assert text.splitlines() == ["kind,ok,missing", "flat,true,"]


def test_csv_rejects_ragged_rows():
    with pytest.raises(ValueError, match="Row 0 has 1 cells"):
        get_handler("csv").format(RaggedReport())


class TestReportRenderer:
    def test_writes_to_stream(self, census):
        stream = io.StringIO()
        text = ReportRenderer(stream).render(census, "csv")
        assert stream.getvalue() == text

    def test_default_format_from_settings(self, census, monkeypatch):
        monkeypatch.setenv("EUCLAB_FORMAT", "csv")
        reset_settings()
        stream = io.StringIO()
        ReportRenderer(stream).render(census)
        assert stream.getvalue().startswith("i,B_i")

    def test_writes_file(self, census, tmp_path):
        target = tmp_path / "nested" / "census.json"
        ReportRenderer(io.StringIO()).render(census, "json", str(target))
        assert json.loads(target.read_text())["B"] == [6, 2, 1]

    def test_format_from_out_suffix(self, census, tmp_path):
        target = tmp_path / "census.csv"
        ReportRenderer(io.StringIO()).render(census, out=str(target))
        assert target.read_text().splitlines()[0] == "i,B_i,union_from_i"

    def test_unknown_format(self, census):
        with pytest.raises(ValueError, match="Unknown format"):
            ReportRenderer(io.StringIO()).render(census, "xml")

    def test_format_failure_wrapped(self):
        with pytest.raises(RuntimeError, match="Failed to format ragged report"):
            ReportRenderer(io.StringIO()).render(RaggedReport(), "csv")

    def test_write_failure_wrapped(self, census, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("x")
        with pytest.raises(RuntimeError, match="Failed to write report"):
            ReportRenderer(io.StringIO()).render(census, "json", str(blocker / "out.json"))
