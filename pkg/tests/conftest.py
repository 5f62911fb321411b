"""helpers for tests"""

import pytest

from ugrid.grid import GridDiagram
from ugrid.library import LIBRARY
from ugrid.types import Configuration


@pytest.fixture
def settings() -> Configuration:
    """Default settings with the index budget of the quick suite."""
    return Configuration(max_index=7)


@pytest.fixture
def unknot() -> GridDiagram:
    """The index 2 unknot."""
    return LIBRARY["unknot2"].grid


@pytest.fixture
def trefoil() -> GridDiagram:
    """The right-handed trefoil."""
    return LIBRARY["trefoil"].grid


@pytest.fixture
def hopf() -> GridDiagram:
    """The positive Hopf link."""
    return LIBRARY["hopf"].grid
