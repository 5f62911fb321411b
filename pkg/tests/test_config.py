"""test suite for ugrid.Configuration"""

import pytest
import yaml

from ugrid import Configuration
from ugrid.types import HUGE_INDEX, from_dict


def test_parse_configuration_from_file():
    """Should parse a verification suite from a YAML file."""
    with open("tests/stubs/quick.ugrid.yml", "r", encoding="utf8") as file:
        config = from_dict(Configuration, yaml.safe_load(file))
    assert config.max_index == 7
    assert config.seed == 11
    assert config.quick_index == 5
    assert config.checks[2] == {"oracle": {"max_index": 4, "max_power": 3}}


def test_parse_configuration_from_dict():
    """Should fill in the defaults."""
    config = from_dict(Configuration, {})
    assert config.max_index == 10
    assert config.huge is False
    assert config.threads == 1
    assert config.seed == 7
    assert config.sigma == "auto"
    assert config.db_url is None
    assert config.check_complex is True
    assert config.checks == []


@pytest.mark.parametrize(
    ["sigma", "expected"],
    [
        pytest.param("auto", None, id="auto"),
        pytest.param("none", None, id="none"),
        pytest.param("external:-4", -4, id="negative"),
        pytest.param("external:6", 6, id="positive"),
    ],
)
def test_external_sigma(sigma: str, expected):
    """Should read the externally supplied signature only from ``external:<int>``."""
    assert Configuration(sigma=sigma).external_sigma == expected


@pytest.mark.parametrize(
    ["values"],
    [
        pytest.param({"sigma": "external:two"}, id="sigma"),
        pytest.param({"max_index": 0}, id="max_index"),
        pytest.param({"threads": 0}, id="threads"),
        pytest.param({"random_max_index": 1}, id="random_max_index"),
    ],
)
def test_invalid_configuration(values):
    """Should refuse invalid settings."""
    with pytest.raises(ValueError):
        from_dict(Configuration, values)


def test_index_budget():
    """Should only allow index 11 with the huge flag."""
    assert Configuration(max_index=10).index_allowed(10)
    assert not Configuration(max_index=10).index_allowed(HUGE_INDEX)
    assert Configuration(max_index=10, huge=True).index_allowed(HUGE_INDEX)
    assert not Configuration(max_index=10, huge=True).index_allowed(HUGE_INDEX + 1)
