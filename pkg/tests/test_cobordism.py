"""Test suite for chain maps and the band move maps."""

import pytest

from ugrid.checks.maps import pair_defects
from ugrid.cobordism import (
    ChainMap,
    Homotopy,
    accumulate,
    band_euler_number,
    clmul,
    differential_map,
    induced_isomorphism_at_u1,
    localized_homology_dimension,
    oriented_saddle,
    swap_o_markings,
    u_times_identity,
    unorientable_band,
    unorientable_saddle,
)
from ugrid.complex import UComplex, build_complex
from ugrid.grid import PlanarRealization, trace_components, validate
from ugrid.library import LIBRARY, builtins_up_to
from ugrid.types import InputError, NotASaddleConfiguration, NotUnorientableConfiguration

# pylint: disable=W0621


@pytest.fixture
def torsion_complex() -> UComplex:
    """``x -> U y`` with both generators in grading 0."""
    return UComplex.from_entries(delta2=[0, 0], entries=[(0, 1, 1)])


def identity(complex_: UComplex) -> ChainMap:
    """The identity map."""
    return ChainMap(complex_, complex_, {g: {g: 1} for g in range(complex_.size)}, "id")


def test_clmul():
    """Should multiply polynomials over the two-element field."""
    assert clmul(0b11, 0b11) == 0b101
    assert clmul(0b10, 0b110) == 0b1100
    assert clmul(0, 0b111) == 0


def test_accumulate():
    """Should drop coefficients that cancel."""
    entries = {}
    accumulate(entries, 0, 1, 0b1)
    assert entries == {0: {1: 0b1}}
    accumulate(entries, 0, 1, 0b1)
    assert entries == {}


def test_identity_is_a_chain_map(torsion_complex):
    """Should commute with the differential."""
    chain_map = identity(torsion_complex)
    assert chain_map.is_chain_map()
    assert chain_map.measured_shifts() == {0}
    assert not chain_map.shift_defects()


def test_projection_is_not_a_chain_map(torsion_complex):
    """Should report ``∂∘f + f∘∂`` entries."""
    projection = ChainMap(torsion_complex, torsion_complex, {1: {1: 0b1}}, "p")
    assert projection.chain_map_defects() == [(0, 1, 0b10)]
    assert not projection.is_chain_map()


def test_composition(torsion_complex):
    """Should compose and add maps."""
    u_map = u_times_identity(torsion_complex)
    square = u_map * u_map
    assert square.entries == {0: {0: 0b100}, 1: {1: 0b100}}
    assert square.declared_shift == -4
    assert (u_map + u_map).is_zero()
    assert (differential_map(torsion_complex) * differential_map(torsion_complex)).is_zero()


def test_shift_defects(torsion_complex):
    """Should flag monomials of an undeclared degree."""
    chain_map = identity(torsion_complex)
    chain_map.declared_shift = -2
    assert chain_map.shift_defects() == [(0, 0, 0), (1, 1, 0)]


def test_homotopy_identity(torsion_complex):
    """Should vanish for the zero homotopy between ``U`` and ``U``."""
    homotopy = Homotopy(torsion_complex, torsion_complex, {}, "H", corrects="U")
    assert homotopy.identity_defects(u_times_identity(torsion_complex)) == []
    assert homotopy.identity_defects(identity(torsion_complex)) != []


def test_localized_isomorphism(trefoil):
    """Should detect isomorphisms at ``U = 1``."""
    complex_ = build_complex(trefoil)
    assert localized_homology_dimension(complex_) == 16
    assert induced_isomorphism_at_u1(identity(complex_))
    assert induced_isomorphism_at_u1(u_times_identity(complex_, 3))
    assert not induced_isomorphism_at_u1(ChainMap(complex_, complex_, {}, "0"))


def test_swap_o_markings(unknot, hopf):
    """Should refuse swaps that stack markings or leave the grid."""
    assert swap_o_markings(hopf, 0) == validate([1, 2, 0, 3], [0, 3, 2, 1])
    with pytest.raises(NotASaddleConfiguration):
        swap_o_markings(unknot, 0)
    with pytest.raises(NotASaddleConfiguration):
        swap_o_markings(hopf, 3)


def test_oriented_saddle(hopf, settings):
    """Should merge the Hopf link into a knot with maps inverse up to ``U``."""
    other, split, merge = oriented_saddle(hopf, 0, settings)
    assert trace_components(other).component_count == 1
    assert split.name == "split" and merge.name == "merge"
    assert split.source.grid == other and split.target.grid == hopf
    assert (split.declared_shift, merge.declared_shift) == (-2, 0)
    assert pair_defects(split, merge, 5) == []


def test_unorientable_band(trefoil):
    """Should resolve the band and relabel the markings along the link."""
    resolved, band = unorientable_band(trefoil, 0)
    assert resolved == validate([4, 2, 3, 0, 1], [0, 3, 1, 2, 4])
    assert not band.orientable
    assert band.columns == (0, 1)
    assert band.euler_number == 6
    assert band.euler_number == band_euler_number(
        PlanarRealization(trefoil), PlanarRealization(resolved), band.epsilon
    )


@pytest.mark.parametrize(
    ["name", "column", "euler_number"],
    [
        pytest.param("unknot2", 0, 2, id="unknot2-0"),
        pytest.param("unknot3", 0, 2, id="unknot3-0"),
        pytest.param("unknot3", 1, 2, id="unknot3-1"),
        pytest.param("trefoil", 0, 6, id="trefoil-0"),
        pytest.param("trefoil-left", 1, -6, id="trefoil-left-1"),
        pytest.param("trefoil-left", 2, -6, id="trefoil-left-2"),
        pytest.param("figure-eight", 0, -2, id="figure-eight-0"),
        pytest.param("figure-eight", 4, 2, id="figure-eight-4"),
    ],
)
def test_band_euler_numbers(name, column, euler_number):
    """Should match the Euler number implied by the grading shift of ``ν``."""
    _, band = unorientable_band(LIBRARY[name].grid, column)
    assert band.euler_number == euler_number


def test_unorientable_saddle(trefoil, settings):
    """Should give maps of degrees ``(e - 2) / 2`` and ``-(2 + e) / 2`` inverse up to ``U``."""
    resolved, nu, nu_prime, e = unorientable_saddle(trefoil, 0, settings)
    assert trace_components(resolved).component_count == 1
    assert e == 6
    assert (nu.declared_shift, nu_prime.declared_shift) == (2, -4)
    assert nu.measured_shifts() == {2}
    assert nu_prime.measured_shifts() == {-4}
    assert pair_defects(nu, nu_prime, 5) == []


@pytest.mark.parametrize(
    ["name"],
    [
        pytest.param(entry.name, id=entry.name)
        for entry in builtins_up_to(6)
        if trace_components(entry.grid).component_count == 1
    ],
)
def test_unorientable_saddle_shifts(name, settings):
    """Should measure the declared shifts on every band of the knot."""
    grid = LIBRARY[name].grid
    bands = 0
    for column in range(grid.n - 1):
        try:
            unorientable_band(grid, column)
        except InputError:
            continue
        bands += 1
        _, nu, nu_prime, e = unorientable_saddle(grid, column, settings)
        assert e % 2 == 0
        assert nu.measured_shifts() == {(e - 2) // 2}
        assert nu_prime.measured_shifts() == {-(2 + e) // 2}
        assert nu.declared_shift + nu_prime.declared_shift == -2
    assert bands


@pytest.mark.parametrize(
    ["name", "column"],
    [
        pytest.param("hopf", 0, id="hopf"),
        pytest.param("trefoil", 0, id="trefoil"),
    ],
)
def test_oriented_saddle_shifts(name, column, settings):
    """Should measure ``-2`` on the split map and ``0`` on the merge map."""
    _, split, merge = oriented_saddle(LIBRARY[name].grid, column, settings)
    assert split.measured_shifts() == {-2}
    assert merge.measured_shifts() == {0}


def test_unorientable_saddle_needs_a_neighbour(trefoil):
    """Should refuse the last column."""
    with pytest.raises(NotUnorientableConfiguration):
        unorientable_saddle(trefoil, 4)
