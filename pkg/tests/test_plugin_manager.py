"""Test suite for the check plug-in manager."""

import functools

import pytest

from ugrid.checks import BUILTIN_CHECKS
from ugrid.library import LIBRARY
from ugrid.plugin_manager import check_name, get_check, list_checks
from ugrid.types import Configuration, InputError


def test_get_check_by_name():
    """Should bind the default configuration."""
    check = get_check("oracle")
    assert isinstance(check, functools.partial)
    assert check.keywords["configuration"] == {"max_index": 5, "max_power": 4}


def test_get_check_with_configuration():
    """Should merge the given configuration over the defaults."""
    check = get_check({"oracle": {"max_power": 2}})
    assert check.keywords["configuration"] == {"max_index": 5, "max_power": 2}
    assert get_check({"signature": None}).keywords["configuration"] == {}


def test_bound_check_runs():
    """Should run a bound check on named grids."""
    results = get_check("d_squared")([("builtin:trefoil", LIBRARY["trefoil"].grid)], Configuration())
    assert len(results) == 1
    assert results[0].passed


@pytest.mark.parametrize(
    ["spec", "error"],
    [
        pytest.param("nothing", InputError, id="unknown-name"),
        pytest.param({"nothing": {}}, InputError, id="unknown-dict"),
        pytest.param({}, InputError, id="empty"),
        pytest.param(3, NotImplementedError, id="type"),
    ],
)
def test_get_check_errors(spec, error):
    """Should refuse unknown or malformed specifications."""
    with pytest.raises(error):
        get_check(spec)


def test_check_name():
    """Should name both spec forms."""
    assert check_name("mirror") == "mirror"
    assert check_name({"wrbraid": {"random": 0}}) == "wrbraid"


def test_list_checks():
    """Should list every shipped check with its summary."""
    checks = list_checks()
    assert set(BUILTIN_CHECKS) <= set(checks)
    assert all(checks[name] for name in BUILTIN_CHECKS)
