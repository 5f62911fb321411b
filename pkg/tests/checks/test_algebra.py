"""Test suite for the checks on the grid complex."""

import pytest

from ugrid.checks.algebra import d_squared_check, homogeneity_check, oracle_check
from ugrid.library import LIBRARY
from ugrid.types import Configuration

# pylint: disable=W0621


@pytest.fixture
def subjects():
    """Small knots and links."""
    return [(f"builtin:{name}", LIBRARY[name].grid) for name in ("unknot3", "hopf", "trefoil")]


@pytest.mark.parametrize(
    ["check"],
    [
        pytest.param(d_squared_check, id="d_squared"),
        pytest.param(homogeneity_check, id="homogeneity"),
    ],
)
def test_complex_checks_pass(check, subjects):
    """Should pass on every grid complex."""
    results = check(subjects, Configuration(), {})
    assert [result.subject for result in results] == [name for name, _ in subjects]
    assert all(result.passed for result in results)


def test_checks_skip_large_grids(subjects):
    """Should leave out grids above the check's index cap."""
    results = d_squared_check(subjects, Configuration(), {"max_index": 4})
    assert [result.subject for result in results] == ["builtin:unknot3", "builtin:hopf"]


def test_oracle(subjects):
    """Should agree with the mod ``U^k`` oracle."""
    results = oracle_check(subjects, Configuration(), {"max_index": 5, "max_power": 3})
    assert len(results) == 3
    assert all(result.passed for result in results)
    assert results[2].detail == "F[U]_(-1)^16 + (F[U]/(U))_(-1)^16 compared up to U^3"
