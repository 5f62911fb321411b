"""Test suite for the checks on grid moves."""

import pytest

from ugrid.checks.symmetry import (
    disjoint_union_check,
    mirror_check,
    realization_defects,
    stabilization_check,
    wrbraid_check,
)
from ugrid.grid import PlanarRealization
from ugrid.library import LIBRARY
from ugrid.types import Configuration

# pylint: disable=W0621


@pytest.fixture
def subjects():
    """A knot and a split link."""
    return [(name, LIBRARY[name].grid) for name in ("trefoil", "unlink2")]


def test_wrbraid(subjects):
    """Should hold on every fundamental domain and on random grids."""
    results = wrbraid_check(
        subjects, Configuration(seed=5), {"random": 10, "min_index": 3, "random_max_index": 5}
    )
    assert [result.subject for result in results] == [
        "trefoil",
        "unlink2",
        "10 random planar grids",
    ]
    assert results[0].detail == "25 fundamental domains"
    assert all(result.passed for result in results)


def test_wrbraid_limited_shifts(subjects):
    """Should try only the requested number of domains."""
    results = wrbraid_check(subjects, Configuration(), {"random": 0, "shifts": 2})
    assert len(results) == 2
    assert results[0].detail == "2 fundamental domains"


def test_mirror(subjects):
    """Should find dual modules and reflected υ-sets."""
    results = mirror_check(subjects, Configuration(), {})
    assert all(result.passed for result in results)
    assert results[0].detail == "1 components, 2υ-set (-2,)"


def test_stabilization(subjects):
    """Should leave the module unchanged at both ends."""
    results = stabilization_check(subjects, Configuration(max_index=7), {"columns": [0, -1]})
    assert len(results) == 2
    assert all(result.passed for result in results)


def test_stabilization_margin(subjects):
    """Should skip grids whose stabilization exceeds the cap."""
    assert [r.subject for r in stabilization_check(subjects, Configuration(max_index=5), {})] == [
        "unlink2"
    ]


def test_disjoint_union(subjects):
    """Should add unknots to knots only."""
    results = disjoint_union_check(subjects, Configuration(max_index=7), {"copies": 1})
    assert [result.subject for result in results] == ["trefoil"]
    assert results[0].passed


@pytest.mark.parametrize(
    ["max_index", "expected"],
    [
        pytest.param(7, ["trefoil"], id="quick-cap"),
        pytest.param(6, [], id="tight"),
    ],
)
def test_disjoint_union_respects_the_cap(max_index, expected):
    """Should leave out knots whose union with the unknots outgrows the cap."""
    knots = [(name, LIBRARY[name].grid) for name in ("trefoil", "figure-eight")]
    results = disjoint_union_check(
        knots, Configuration(), {"copies": 1, "max_index": max_index}
    )
    assert [result.subject for result in results] == expected


def test_realization_defects():
    """Should find nothing wrong with the planar trefoil."""
    assert realization_defects(PlanarRealization(LIBRARY["trefoil"].grid, (1, 2))) == []
