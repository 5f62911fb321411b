"""Test suite for the homology job."""

import pytest

from ugrid import Configuration, HomologyJob
from ugrid.complex import load_complex
from ugrid.model import get_reports, open_store
from ugrid.types import InputError, SizeLimitExceeded

# pylint: disable=W0621


def test_job_runs_to_completion():
    """Should advance through every stage with a single call."""
    job = HomologyJob({"max_index": 7})
    report = job.run("builtin:trefoil")
    assert job.state == "done"
    assert set(report.timings) == {"loading", "building", "reducing", "analysing", "reporting"}
    assert report.subject == "builtin:trefoil"
    assert report.components == 1
    assert report.module == {"free": [-2], "torsion": [[-2, 1]]}
    assert report.upsilon == -1
    assert report.upsilon_set == [-2]
    assert report.sigma == -2
    assert report.sigma_source == "computed"
    assert report.renormalized == [0]
    assert report.gamma4_bound == 0
    assert report.notes == []


def test_job_without_auto_transitions():
    """Should wait for the triggers."""
    job = HomologyJob(auto_transitions=False)
    job.start("builtin:unknot2")
    assert job.state == "loading"
    job.build_stage()
    job.reduce_stage()
    assert job.module is not None
    job.analyse_stage()
    job.report_stage()
    job.finish()
    assert job.report.upsilon == 0
    assert job.report.timings == {}


def test_links():
    """Should leave knot-only fields empty for links."""
    report = HomologyJob().run("builtin:hopf")
    assert report.components == 2
    assert report.upsilon is None
    assert report.upsilon_set == [-2, -2]
    assert report.renormalized == [0, 0]
    assert report.gamma4_bound is None


def test_external_signature():
    """Should use and record an externally supplied signature."""
    report = HomologyJob(Configuration(sigma="external:-2")).run("tests/stubs/trefoil.grid")
    assert report.sigma == -2
    assert report.sigma_source == "external"
    assert len(report.notes) == 1


def test_without_signature(trefoil):
    """Should skip σ and everything derived from it."""
    report = HomologyJob(Configuration(sigma="none")).run(trefoil, "trefoil")
    assert report.subject == "trefoil"
    assert report.sigma is None
    assert report.renormalized is None
    assert report.gamma4_bound is None


def test_dump_and_store(tmp_path):
    """Should write the complex and append the report to the store."""
    db_url = f"sqlite:///{tmp_path / 'reports.db'}"
    dump = tmp_path / "unknot.ugc"
    report = HomologyJob(Configuration(db_url=db_url), dump=dump).run("builtin:unknot3")
    assert load_complex(dump).size == 6
    with open_store(db_url).begin() as session:
        assert get_reports(session) == [report]


def test_errors():
    """Should raise input and size errors."""
    with pytest.raises(InputError):
        HomologyJob().run("builtin:nothing")
    with pytest.raises(SizeLimitExceeded):
        HomologyJob(Configuration(max_index=4)).run("builtin:trefoil")
