"""Test suite for the helpers shared by the checks."""

import pytest

from ugrid.checks.common import (
    CheckConfiguration,
    feasible,
    guarded,
    index_cap,
    load_configuration,
    outcome,
    random_subjects,
)
from ugrid.library import LIBRARY
from ugrid.types import (
    HUGE_INDEX,
    CheckResult,
    Configuration,
    InvalidCrossingColumns,
    SizeLimitExceeded,
)


@pytest.mark.parametrize(
    ["settings", "configuration", "expected"],
    [
        pytest.param(Configuration(), CheckConfiguration(), 10, id="global"),
        pytest.param(Configuration(), CheckConfiguration(max_index=6), 6, id="check"),
        pytest.param(Configuration(max_index=5), CheckConfiguration(max_index=6), 5, id="capped"),
        pytest.param(
            Configuration(huge=True), CheckConfiguration(max_index=12), HUGE_INDEX, id="huge"
        ),
    ],
)
def test_index_cap(settings, configuration, expected):
    """Should never exceed the global budget."""
    assert index_cap(settings, configuration) == expected


def test_feasible():
    """Should keep subjects that fit with the requested margin."""
    subjects = [(name, LIBRARY[name].grid) for name in ("unknot2", "trefoil", "torus-3-4")]
    assert [name for name, _ in feasible(subjects, 7)] == ["unknot2", "trefoil", "torus-3-4"]
    assert [name for name, _ in feasible(subjects, 7, margin=2)] == ["unknot2", "trefoil"]


def test_guarded():
    """Should turn input errors into failed results and pass size errors on."""

    def invalid():
        raise InvalidCrossingColumns("no crossing")

    def too_large():
        raise SizeLimitExceeded("index 12")

    result = guarded("crossing_change", "trefoil", invalid)
    assert not result.passed
    assert result.detail == "InvalidCrossingColumns: no crossing"
    with pytest.raises(SizeLimitExceeded):
        guarded("crossing_change", "trefoil", too_large)
    passing = CheckResult(check="c", subject="s", passed=True)
    assert guarded("c", "s", lambda: passing) is passing


def test_outcome():
    """Should pass exactly without defects and cap the counterexample."""
    assert outcome("c", "s", []).passed
    failed = outcome("c", "s", range(10), limit=3)
    assert not failed.passed
    assert failed.counterexample == ["0", "1", "2"]


def test_random_subjects():
    """Should draw named grids reproducibly within the index range."""
    first = random_subjects(20, 2, 5, seed=3)
    assert first == random_subjects(20, 2, 5, seed=3)
    assert [name for name, _ in first][:2] == ["random-0", "random-1"]
    assert all(2 <= grid.n <= 5 for _, grid in first)


def test_load_configuration():
    """Should accept dictionaries and instances."""
    assert load_configuration(CheckConfiguration, {"limit": 2}).limit == 2
    configuration = CheckConfiguration(max_index=3)
    assert load_configuration(CheckConfiguration, configuration) is configuration
