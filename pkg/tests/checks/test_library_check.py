"""Test suite for the library check."""

from ugrid.checks.library import TORUS_UPSILONS, library_check
from ugrid.library import LIBRARY
from ugrid.types import Configuration


def test_closed_forms_only():
    """Should compare the formulas with published values."""
    (result,) = library_check([], Configuration(), {"connected_sums": 3})
    assert result.subject == "closed forms"
    assert result.passed
    assert result.detail == f"{len(TORUS_UPSILONS)} torus knots"


def test_library_entries():
    """Should reproduce the expected values of named built-ins."""
    subjects = [
        ("builtin:trefoil", LIBRARY["trefoil"].grid),
        ("hopf", LIBRARY["hopf"].grid),
        ("random-0", LIBRARY["unknot2"].grid),
    ]
    results = library_check(subjects, Configuration(), {"closed_forms": False})
    assert [result.subject for result in results] == ["builtin:trefoil", "hopf"]
    assert all(result.passed for result in results)
    assert "determinant [derived]" in results[0].detail


def test_provenance_filter():
    """Should compare only the selected provenance."""
    subjects = [("trefoil", LIBRARY["trefoil"].grid)]
    (result,) = library_check(
        subjects, Configuration(), {"closed_forms": False, "provenance": ["paper"]}
    )
    assert result.detail == "upsilon [paper], sigma [paper]"


def test_planar_keys_above_the_cap():
    """Should still compare σ and the determinant of grids above the index cap."""
    subjects = [("builtin:pretzel-2-m1-m2-1", LIBRARY["pretzel-2-m1-m2-1"].grid)]
    (result,) = library_check(subjects, Configuration(), {"closed_forms": False})
    assert result.passed
    assert result.detail == "sigma [derived], determinant [derived]"
    only_paper = {"closed_forms": False, "provenance": ["paper"]}
    assert library_check(subjects, Configuration(), only_paper) == []
