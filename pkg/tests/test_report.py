"""Test suite for reports and their tables."""

import json

import pytest

from ugrid.homology import GradedModule
from ugrid.report import (
    BandReport,
    Report,
    TorusReport,
    checks_table,
    grid_payload,
    module_table,
    summary_table,
    write_tables,
)
from ugrid.types import CheckResult

# pylint: disable=W0621


@pytest.fixture
def report(trefoil) -> Report:
    """A report as written for the right-handed trefoil."""
    return Report(
        subject="builtin:trefoil",
        grid=grid_payload(trefoil),
        components=1,
        module=GradedModule(free=(-2,), torsion=((-2, 1),)).to_dict(),
        upsilon=-1,
        upsilon_set=[-2],
        sigma=-2,
        sigma_source="computed",
        renormalized=[0],
        gamma4_bound=0,
        timings={"building": 0.01},
        checks=[CheckResult(check="paper", subject="builtin:trefoil", passed=True)],
    )


def test_json_round_trip(report):
    """Should read back what it writes."""
    text = report.to_json()
    assert json.loads(text)["grid"] == {"o": [0, 4, 3, 2, 1], "x": [3, 2, 1, 0, 4]}
    assert Report.from_json(text) == report


def test_passed(report):
    """Should pass only when every check passed."""
    assert report.passed
    report.checks.append(CheckResult(check="mirror", subject="x", passed=False))
    assert not report.passed


def test_module_table():
    """Should list summands with halved gradings."""
    table = module_table(GradedModule(free=(-4,), torsion=((-6, 1), (-6, 1))))
    assert table.to_dict("records") == [
        {"summand": "F[U]", "delta": "-2", "multiplicity": 1},
        {"summand": "F[U]/(U)", "delta": "-3", "multiplicity": 2},
    ]


def test_summary_table(report):
    """Should skip missing values."""
    table = summary_table(report)
    values = dict(zip(table["field"], table["value"]))
    assert values["upsilon"] == -1
    assert values["upsilon set"] == "-1"
    assert values["module"] == "F[U]_(-1) + (F[U]/(U))_(-1)"
    assert "gamma4 bound" in values
    assert list(summary_table(Report(subject="x"))["field"]) == ["subject", "sigma source"]


def test_checks_table(report):
    """Should give one row per check."""
    table = checks_table(report.checks)
    assert list(table.columns) == ["check", "subject", "passed", "detail", "counterexample"]
    assert table.shape == (1, 5)
    assert checks_table([]).empty


def test_write_tables(report, tmp_path):
    """Should write one csv file per table."""
    written = write_tables({"summary": summary_table(report)}, tmp_path / "out")
    assert written == [tmp_path / "out" / "summary.csv"]
    assert written[0].read_text(encoding="utf8").startswith("field,value")


def test_torus_and_band_reports():
    """Should serialize the closed form and band reports."""
    torus = TorusReport(p=2, q=3, exponents=[1, 0, -1], m_sequence=[0, -1, -2], upsilon=-1, genus=1)
    assert json.loads(torus.to_json())["upsilon"] == -1
    band = BandReport(subject="builtin:hopf", column=0, orientable=True, target={"o": [1], "x": [0]})
    assert band.passed
    assert json.loads(band.to_json())["orientable"] is True
