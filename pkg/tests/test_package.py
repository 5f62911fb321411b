"""Test suite for package wide tests"""

import ugrid


def test_version():
    """Should assert that the package version is current."""

    assert ugrid.__version__ == "0.1.0a0"
