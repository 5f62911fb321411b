"""Test suite for the grid complex."""

import io
import math

import numpy as np
import pytest

from ugrid.complex import (
    UComplex,
    build_complex,
    d_squared_defects,
    d_squared_is_zero,
    dump_complex,
    empty_rectangles,
    enumerate_states,
    homogeneity_defects,
    load_complex,
    read_complex,
    state_id,
    state_keys,
    write_complex,
)
from ugrid.grid import GridState, gradings
from ugrid.library import LIBRARY
from ugrid.types import Configuration, NotAComplex, SizeLimitExceeded

# pylint: disable=W0621


def test_enumerate_states():
    """Should list all permutations in lexicographic order."""
    states = enumerate_states(4)
    assert states.shape == (24, 4)
    assert states[0].tolist() == [0, 1, 2, 3]
    assert states[-1].tolist() == [3, 2, 1, 0]
    assert np.all(np.diff(state_keys(states)) > 0)


@pytest.mark.parametrize(["n"], [pytest.param(n, id=f"index-{n}") for n in (3, 5)])
def test_state_id_is_the_lexicographic_rank(n):
    """Should rank states the way they are enumerated."""
    for rank, rows in enumerate(enumerate_states(n)):
        assert state_id(GridState(tuple(int(_) for _ in rows))) == rank


def test_unknot_rectangles(unknot):
    """Should find the two rectangles between the states of the index 2 unknot."""
    rectangles = empty_rectangles(unknot, GridState((0, 1)))
    assert len(rectangles) == 2
    assert {r.weight for r in rectangles} == {1}
    assert {r.target for r in rectangles} == {GridState((1, 0))}


def test_unknot_complex(unknot):
    """Should cancel the two rectangles of the index 2 unknot over F[U]."""
    complex_ = build_complex(unknot)
    assert complex_.size == 2
    assert complex_.delta2.tolist() == [0, 0]
    assert complex_.entry_count == 0


def test_gradings_of_generators(trefoil):
    """Should assign every generator the gradings of its state."""
    complex_ = build_complex(trefoil)
    for rows in [(0, 1, 2, 3, 4), (4, 3, 2, 1, 0), (2, 0, 4, 1, 3)]:
        state = GridState(rows)
        value = gradings(trefoil, state)
        assert complex_.delta2[state_id(state)] == value.delta2
        assert complex_.alexander2[state_id(state)] == 2 * value.alexander


def test_rectangles_agree_with_the_complex(trefoil):
    """Should count each rectangle pair once, cancelling the doubled ones."""
    complex_ = build_complex(trefoil)
    for rows in [(0, 1, 2, 3, 4), (1, 3, 0, 4, 2)]:
        state = GridState(rows)
        counted = {}
        for rectangle in empty_rectangles(trefoil, state):
            key = state_id(rectangle.target)
            counted.setdefault(key, []).append(rectangle.weight)
        expected = {key: weights[0] for key, weights in counted.items() if len(weights) == 1}
        assert complex_.differential.get(state_id(state), {}) == expected


@pytest.mark.parametrize(
    ["name"],
    [
        pytest.param(name, id=name)
        for name in ["unknot3", "unlink2", "hopf", "trefoil", "figure-eight"]
    ],
)
def test_grid_complex_is_a_complex(name):
    """Should square to zero and be homogeneous."""
    complex_ = build_complex(LIBRARY[name].grid)
    assert complex_.size == math.factorial(LIBRARY[name].grid.n)
    assert d_squared_is_zero(complex_)
    assert not homogeneity_defects(complex_)


def test_threads_do_not_change_the_complex(trefoil):
    """Should build the same differential with several workers."""
    single = build_complex(trefoil, Configuration(threads=1))
    pooled = build_complex(trefoil, Configuration(threads=4))
    assert single.differential == pooled.differential


def test_size_limit(trefoil):
    """Should refuse grids above the index budget."""
    with pytest.raises(SizeLimitExceeded):
        build_complex(trefoil, Configuration(max_index=4))


def test_d_squared_defects():
    """Should report ``∂∘∂`` entries as polynomial bitmasks."""
    complex_ = UComplex.from_entries(delta2=[2, 0, -2], entries=[(0, 1, 0), (1, 2, 0)])
    assert d_squared_defects(complex_) == [(0, 2, 1)]
    assert not d_squared_is_zero(complex_)


def test_homogeneity_defects():
    """Should report entries of the wrong degree."""
    complex_ = UComplex.from_entries(delta2=[0, 0], entries=[(0, 1, 0)])
    assert homogeneity_defects(complex_) == [(0, 1, 0)]


def test_from_entries():
    """Should cancel repeated entries and refuse conflicting powers."""
    complex_ = UComplex.from_entries(delta2=[0, 0], entries=[(0, 1, 1), (0, 1, 1)])
    assert complex_.entry_count == 0
    with pytest.raises(NotAComplex):
        UComplex.from_entries(delta2=[0, 0], entries=[(0, 1, 1), (0, 1, 2)])


def test_relabeled():
    """Should carry gradings and entries along a renaming."""
    complex_ = UComplex.from_entries(delta2=[0, -2, 0], entries=[(0, 2, 1)])
    renamed = complex_.relabeled([2, 0, 1])
    assert renamed.delta2.tolist() == [0, 0, -2]
    assert list(renamed.entries()) == [(1, 0, 1)]


def test_write_complex(trefoil, tmp_path):
    """Should write and read the complex text format."""
    complex_ = build_complex(trefoil)
    stream = io.StringIO()
    write_complex(complex_, stream)
    assert stream.getvalue().startswith("UGC v1\ng 0 ")
    stream.seek(0)
    restored = read_complex(stream)
    assert restored.delta2.tolist() == complex_.delta2.tolist()
    assert restored.alexander2.tolist() == complex_.alexander2.tolist()
    assert restored.differential == complex_.differential

    dump_complex(complex_, tmp_path / "trefoil.ugc")
    assert load_complex(tmp_path / "trefoil.ugc").differential == complex_.differential


@pytest.mark.parametrize(
    ["text"],
    [
        pytest.param("UGC v2\n", id="header"),
        pytest.param("UGC v1\ng 0 0 0\nq 0 1 1\n", id="record"),
        pytest.param("UGC v1\ng 0 0 0\ng 2 0 0\n", id="ids"),
    ],
)
def test_read_complex_errors(text):
    """Should refuse malformed complex files."""
    with pytest.raises(NotAComplex):
        read_complex(io.StringIO(text))
