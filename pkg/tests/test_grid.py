"""Test suite for grid diagrams, states and their combinatorics."""

from fractions import Fraction

import numpy as np
import pytest

from ugrid.complex import enumerate_states
from ugrid.grid import (
    GridState,
    PlanarRealization,
    add_unknots,
    bridge_index,
    crossings,
    disjoint_union,
    dump_grid,
    gradings,
    local_minima,
    marking_points,
    maslov_array,
    mirror,
    parse_grid_document,
    random_grid,
    read_grid,
    reverse_components,
    stabilize,
    trace_components,
    validate,
    writhe,
    wrbraid_defect,
)
from ugrid.library import LIBRARY
from ugrid.types import (
    CoincidentMarkings,
    EmptyGrid,
    GridParseError,
    NotAPermutation,
)

# pylint: disable=W0621


@pytest.mark.parametrize(
    ["o_rows", "x_rows", "error"],
    [
        pytest.param([], [], EmptyGrid, id="empty"),
        pytest.param([0, 0], [1, 0], NotAPermutation, id="repeated"),
        pytest.param([0, 1], [1], NotAPermutation, id="length"),
        pytest.param([0, 1, 2], [0, 2, 1], CoincidentMarkings, id="coincident"),
    ],
)
def test_validate_rejects(o_rows, x_rows, error):
    """Should reject malformed permutations."""
    with pytest.raises(error):
        validate(o_rows, x_rows)


def test_index_one_grid():
    """Should accept the index 1 grid with both markings in one square."""
    grid = validate([0], [0])
    assert grid.n == 1
    assert trace_components(grid).component_count == 1


@pytest.mark.parametrize(
    ["name", "components"],
    [
        pytest.param("unknot2", 1, id="unknot2"),
        pytest.param("unknot3", 1, id="unknot3"),
        pytest.param("unlink2", 2, id="unlink2"),
        pytest.param("hopf", 2, id="hopf"),
        pytest.param("trefoil", 1, id="trefoil"),
        pytest.param("figure-eight", 1, id="figure-eight"),
    ],
)
def test_trace_components(name, components):
    """Should count the link components."""
    structure = trace_components(LIBRARY[name].grid)
    assert structure.component_count == components
    assert set(structure.component_of_column) == set(range(components))
    assert set(structure.component_of_row) == set(range(components))


def test_trefoil_crossings(trefoil):
    """Should find three positive crossings of the right-handed trefoil."""
    found = crossings(trefoil)
    assert len(found) == 3
    assert all(crossing.sign == 1 for crossing in found)
    assert writhe(PlanarRealization(trefoil)) == 3
    assert bridge_index(PlanarRealization(trefoil)) == 2


def test_mirror(trefoil):
    """Should reverse the columns and be an involution."""
    assert mirror(trefoil) == LIBRARY["trefoil-left"].grid
    assert mirror(mirror(trefoil)) == trefoil
    assert writhe(PlanarRealization(mirror(trefoil))) == -3


def test_reverse_components(hopf):
    """Should swap O and X on the reversed component only."""
    reversed_ = reverse_components(hopf, [0])
    structure = trace_components(hopf)
    for column in range(hopf.n):
        if structure.component_of_column[column] == 0:
            assert reversed_.o_rows[column] == hopf.x_rows[column]
        else:
            assert reversed_.o_rows[column] == hopf.o_rows[column]
    assert trace_components(reversed_).component_count == 2


@pytest.mark.parametrize(["column"], [pytest.param(c, id=f"column-{c}") for c in range(5)])
def test_stabilize(trefoil, column):
    """Should add one column and keep the link."""
    stabilized = stabilize(trefoil, column)
    assert stabilized.n == 6
    assert trace_components(stabilized).component_count == 1
    assert wrbraid_defect(PlanarRealization(stabilized)) == 0


def test_stabilize_out_of_range(trefoil):
    """Should refuse columns outside the grid."""
    with pytest.raises(ValueError):
        stabilize(trefoil, 5)


def test_disjoint_union(trefoil, hopf):
    """Should add the components of both grids."""
    union = disjoint_union(trefoil, hopf)
    assert union.n == 9
    assert trace_components(union).component_count == 3
    assert trace_components(add_unknots(trefoil, 2)).component_count == 3


def test_gradings_do_not_depend_on_the_domain(trefoil):
    """Should compute the same gradings in every fundamental domain."""
    state = GridState((2, 0, 4, 1, 3))
    reference = gradings(trefoil, state)
    for shift in [(1, 0), (0, 3), (2, 4), (4, 4)]:
        assert gradings(trefoil, state, shift) == reference


def test_gradings_of_links(hopf):
    """Should give half-integral Alexander gradings for two components."""
    value = gradings(hopf, GridState((0, 1, 2, 3)))
    assert value.delta == Fraction(value.delta2, 2)
    assert value.alexander == Fraction(value.maslov_o - value.maslov_x - 2, 2)


def test_maslov_array(trefoil):
    """Should agree with the pointwise Maslov grading."""
    states = enumerate_states(trefoil.n)
    vectorized = maslov_array(states, trefoil.o_array)
    for index in [0, 17, 59, 101, 119]:
        state = GridState(tuple(int(_) for _ in states[index]))
        assert vectorized[index] == gradings(trefoil, state).maslov_o


def test_state_must_be_a_permutation():
    """Should refuse states with repeated rows."""
    with pytest.raises(NotAPermutation):
        GridState((0, 0, 1))


def test_marking_points(unknot):
    """Should place markings at doubled square centres."""
    assert marking_points(unknot, "O") == [(1, 1, 1), (3, 3, 1)]
    assert marking_points(unknot, "X", -1) == [(1, 3, -1), (3, 1, -1)]


@pytest.mark.parametrize(
    ["name"], [pytest.param(name, id=name) for name in ["unknot2", "hopf", "trefoil"]]
)
def test_wrbraid_identity(name):
    """Should have ``J(O - X, O - X) = b - Wr`` in every fundamental domain."""
    grid = LIBRARY[name].grid
    for a in range(grid.n):
        for b in range(grid.n):
            assert wrbraid_defect(PlanarRealization(grid, (a, b))) == 0


def test_planar_realization_out_of_range(trefoil):
    """Should refuse shifts outside the grid."""
    with pytest.raises(ValueError):
        PlanarRealization(trefoil, (5, 0))


def test_random_grid():
    """Should draw valid grids reproducibly."""
    first = random_grid(6, np.random.default_rng(3))
    second = random_grid(6, np.random.default_rng(3))
    assert first == second
    assert all(o != x for o, x in zip(first.o_rows, first.x_rows))


def test_parse_grid_document():
    """Should parse the text format and keep comments."""
    grid, comments = parse_grid_document("# a comment\n3\nO: 0 1 2\nX: 1 2 0\n")
    assert grid == LIBRARY["unknot3"].grid
    assert comments == ["a comment"]


def test_dump_grid(trefoil):
    """Should write a document that parses back to the same grid."""
    text = dump_grid(trefoil, ["right-handed trefoil"])
    assert text.startswith("# right-handed trefoil\n5\n")
    assert parse_grid_document(text) == (trefoil, ["right-handed trefoil"])


@pytest.mark.parametrize(
    ["text"],
    [
        pytest.param("3\nO: 0 1 2\n", id="missing-line"),
        pytest.param("three\nO: 0 1 2\nX: 1 2 0\n", id="index"),
        pytest.param("3\nO: 0 1 two\nX: 1 2 0\n", id="entry"),
        pytest.param("3\nX: 0 1 2\nO: 1 2 0\n", id="labels"),
        pytest.param("4\nO: 0 1 2\nX: 1 2 0\n", id="declared-index"),
    ],
)
def test_parse_errors(text):
    """Should report malformed documents."""
    with pytest.raises(GridParseError):
        parse_grid_document(text)


def test_read_grid(trefoil):
    """Should read grid files."""
    assert read_grid("tests/stubs/trefoil.grid") == trefoil
    with pytest.raises(GridParseError):
        read_grid("tests/stubs/truncated.grid")
    with pytest.raises(CoincidentMarkings):
        read_grid("tests/stubs/coincident.grid")


@pytest.mark.parametrize(
    ["name"],
    [pytest.param(name, id=name) for name in ("unknot2", "hopf", "trefoil", "figure-eight")],
)
def test_maxima_match_minima(name):
    """Should count as many local minima as maxima on every fundamental domain."""
    grid = LIBRARY[name].grid
    for shift in [(a, b) for a in range(grid.n) for b in range(grid.n)]:
        realization = PlanarRealization(grid, shift)
        assert local_minima(realization) == bridge_index(realization)
