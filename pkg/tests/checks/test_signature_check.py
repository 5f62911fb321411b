"""Test suite for the signature consistency check."""

import pytest

from ugrid.checks.signature import signature_check
from ugrid.library import LIBRARY
from ugrid.types import Configuration


@pytest.mark.parametrize(
    ["name", "detail"],
    [
        pytest.param("trefoil", "σ = -2", id="trefoil"),
        pytest.param("hopf", "σ = -1", id="hopf"),
        pytest.param("figure-eight", "σ = 0", id="figure-eight"),
    ],
)
def test_signature_check(name, detail):
    """Should agree across shadings, domains and mirrors."""
    (result,) = signature_check([(name, LIBRARY[name].grid)], Configuration(), {})
    assert result.passed
    assert result.detail == detail
