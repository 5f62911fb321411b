"""Chain maps between grid complexes and the saddle cobordism maps.

Map coefficients are polynomials over the two-element field stored as
integer bitmasks, bit ``k`` standing for ``U^k``. Composition is written
``second * first`` and sums with ``+``.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Set, Tuple

import numpy as np
from loguru import logger as log

from .complex import UComplex, build_complex, enumerate_states
from .grid import (
    GridDiagram,
    PlanarRealization,
    i_pairing,
    marking_points,
    trace_components,
    validate,
    writhe,
)
from .homology import gf2_rank
from .types import (
    Configuration,
    NotASaddleConfiguration,
    NotUnorientableConfiguration,
)

MapEntries = Dict[int, Dict[int, int]]
"""Sparse map: source id -> {target id: polynomial bitmask}."""


def clmul(first: int, second: int) -> int:
    """Product of two bitmask polynomials over the two-element field."""
    result = 0
    while second:
        if second & 1:
            result ^= first
        first <<= 1
        second >>= 1
    return result


def accumulate(entries: MapEntries, source: int, target: int, polynomial: int) -> None:
    """Add ``polynomial`` to one coefficient, dropping it when it cancels."""
    row = entries.setdefault(source, {})
    value = row.get(target, 0) ^ polynomial
    if value:
        row[target] = value
    else:
        row.pop(target, None)
        if not row:
            del entries[source]


def differential_entries(complex_: UComplex) -> MapEntries:
    """The differential of ``complex_`` as a map."""
    return {
        source: {target: 1 << power for target, power in row.items()}
        for source, row in complex_.differential.items()
        if row
    }


@dataclass
class ChainMap:
    """An F[U]-linear map between two complexes.

    Attributes:
        source: domain
        target: codomain
        entries: sparse coefficients
        name: label used in reports
        declared_shift: change of 2δ, ``2δ(U^k y) - 2δ(x)`` for every entry
    """

    source: UComplex
    target: UComplex
    entries: MapEntries = field(default_factory=dict)
    name: str = ""
    declared_shift: int = 0

    def items(self) -> Iterator[Tuple[int, int, int]]:
        """Iterate ``(source, target, polynomial)``."""
        for source in sorted(self.entries):
            for target, polynomial in sorted(self.entries[source].items()):
                yield source, target, polynomial

    def monomials(self) -> Iterator[Tuple[int, int, int]]:
        """Iterate ``(source, target, power)`` for every monomial."""
        for source, target, polynomial in self.items():
            power = 0
            while polynomial:
                if polynomial & 1:
                    yield source, target, power
                polynomial >>= 1
                power += 1

    def __mul__(self, other: "ChainMap") -> "ChainMap":
        """``self ∘ other``."""
        entries: MapEntries = {}
        for source, row in other.entries.items():
            for middle, first in row.items():
                for target, second in self.entries.get(middle, {}).items():
                    accumulate(entries, source, target, clmul(first, second))
        return ChainMap(
            source=other.source,
            target=self.target,
            entries=entries,
            name=f"{self.name}∘{other.name}",
            declared_shift=self.declared_shift + other.declared_shift,
        )

    def __add__(self, other: "ChainMap") -> "ChainMap":
        entries: MapEntries = {s: dict(row) for s, row in self.entries.items()}
        for source, target, polynomial in other.items():
            accumulate(entries, source, target, polynomial)
        return ChainMap(
            source=self.source,
            target=self.target,
            entries=entries,
            name=f"{self.name}+{other.name}",
            declared_shift=self.declared_shift,
        )

    def is_zero(self) -> bool:
        """Whether every coefficient vanishes."""
        return not any(self.entries.values())

    def measured_shifts(self) -> Set[int]:
        """The set of 2δ-shifts realized by the monomials."""
        return {
            int(self.target.delta2[t]) - 2 * power - int(self.source.delta2[s])
            for s, t, power in self.monomials()
        }

    def shift_defects(self, limit: int = 10) -> List[Tuple[int, int, int]]:
        """Monomials whose shift differs from ``declared_shift``."""
        defects = []
        for s, t, power in self.monomials():
            shift = int(self.target.delta2[t]) - 2 * power - int(self.source.delta2[s])
            if shift != self.declared_shift:
                defects.append((s, t, power))
                if len(defects) >= limit:
                    break
        return defects

    def chain_map_defects(self, limit: int = 10) -> List[Tuple[int, int, int]]:
        """Entries of ``∂∘f + f∘∂``."""
        commutator = differential_map(self.target) * self + self * differential_map(
            self.source
        )
        return list(commutator.items())[:limit]

    def is_chain_map(self) -> bool:
        """Whether ``f`` commutes with the differentials."""
        return not self.chain_map_defects(limit=1)


@dataclass
class Homotopy(ChainMap):
    """A map ``H`` with ``∂H + H∂ = composite + U``.

    Attributes:
        corrects: name of the composite
    """

    corrects: str = ""

    def identity_defects(self, composite: ChainMap, limit: int = 10) -> List[Tuple[int, int, int]]:
        """Entries of ``∂H + H∂ + composite + U·id``."""
        total = (
            differential_map(self.target) * self
            + self * differential_map(self.source)
            + composite
            + u_times_identity(self.source)
        )
        return list(total.items())[:limit]


def differential_map(complex_: UComplex) -> ChainMap:
    """The differential as a chain map of shift -2."""
    return ChainMap(
        source=complex_,
        target=complex_,
        entries=differential_entries(complex_),
        name="∂",
        declared_shift=-2,
    )


def u_times_identity(complex_: UComplex, power: int = 1) -> ChainMap:
    """Multiplication by ``U^power``."""
    return ChainMap(
        source=complex_,
        target=complex_,
        entries={g: {g: 1 << power} for g in range(complex_.size)},
        name=f"U^{power}",
        declared_shift=-2 * power,
    )


@dataclass
class SaddleBand:
    """A band attached between two adjacent columns.

    Attributes:
        columns: the modified columns
        orientable: whether the band respects the orientation
        epsilon: e minus the writhe difference, +1 in the standard picture
        euler_number: e(B), zero for orientable bands
    """

    columns: Tuple[int, int]
    orientable: bool
    epsilon: int = 0
    euler_number: int = 0


def _diagonal_map(
    source: UComplex,
    target: UComplex,
    in_arc: np.ndarray,
    power_on_arc: int,
    name: str,
    declared_shift: int,
) -> ChainMap:
    """``x -> U^power_on_arc x`` on the arc, ``x -> U^(1 - power_on_arc) x`` off it."""
    entries = {
        g: {g: 1 << (power_on_arc if inside else 1 - power_on_arc)}
        for g, inside in enumerate(in_arc.tolist())
    }
    return ChainMap(source, target, entries, name=name, declared_shift=declared_shift)


def _arc_membership(n: int, circle: int, start: int, end: int) -> np.ndarray:
    """Whether each state's component on ``circle`` lies in the cyclic arc ``(start, end]``."""
    states = enumerate_states(n).astype(np.int64)
    offset = (states[:, circle] - start) % n
    return (offset > 0) & (offset <= (end - start) % n)


def _complexes(
    first: GridDiagram, second: GridDiagram, configuration: Optional[Configuration]
) -> Tuple[UComplex, UComplex]:
    return build_complex(first, configuration), build_complex(second, configuration)


def swap_o_markings(grid: GridDiagram, column: int) -> GridDiagram:
    """Exchange the O-markings of ``column`` and ``column + 1``."""
    if not 0 <= column < grid.n - 1:
        raise NotASaddleConfiguration(f"Column {column} has no right neighbour.")
    o_rows = list(grid.o_rows)
    o_rows[column], o_rows[column + 1] = o_rows[column + 1], o_rows[column]
    if o_rows[column] == grid.x_rows[column] or o_rows[column + 1] == grid.x_rows[column + 1]:
        raise NotASaddleConfiguration(f"Swapping O's at column {column} stacks markings.")
    return validate(o_rows, grid.x_rows)


def oriented_saddle(
    grid: GridDiagram, column: int, configuration: Optional[Configuration] = None
) -> Tuple[GridDiagram, ChainMap, ChainMap]:
    """Oriented band move exchanging the O-markings of two adjacent columns.

    States whose component on the circle between the columns lies in the arc
    ``A = (o_column, o_column+1]`` are multiplied by ``U`` on the way from
    ``grid`` to the new grid, the others on the way back.

    Returns:
        the new grid, the split map and the merge map
    Raises:
        NotASaddleConfiguration: if the component count does not change by one
    """
    swapped = swap_o_markings(grid, column)
    ell = trace_components(grid).component_count
    ell_swapped = trace_components(swapped).component_count
    if abs(ell - ell_swapped) != 1:
        raise NotASaddleConfiguration(
            f"Swapping O's at column {column} keeps {ell} components."
        )
    complex_, complex_swapped = _complexes(grid, swapped, configuration)
    in_arc = _arc_membership(
        grid.n, column + 1, grid.o_rows[column], grid.o_rows[column + 1]
    )
    splits_here = ell_swapped == ell + 1
    forward = _diagonal_map(
        complex_,
        complex_swapped,
        in_arc,
        1,
        "split" if splits_here else "merge",
        -2 if splits_here else 0,
    )
    backward = _diagonal_map(
        complex_swapped,
        complex_,
        in_arc,
        0,
        "merge" if splits_here else "split",
        0 if splits_here else -2,
    )
    log.debug(f"Oriented saddle at column {column}: {ell} -> {ell_swapped} components.")
    if splits_here:
        return swapped, forward, backward
    return swapped, backward, forward


def _resolve_unorientable(grid: GridDiagram, column: int) -> GridDiagram:
    """Exchange the X of ``column`` with the O of ``column + 1`` and relabel.

    The exchange leaves two O's in ``column`` and two X's in ``column + 1``.
    Starting at the lower X of ``column + 1`` the markings are flipped along
    the link, alternating row and column partners, until a row leads into
    ``column``.
    """
    n = grid.n
    c = column
    labels: Dict[Tuple[int, int], str] = {}
    for k in range(n):
        labels[(k, grid.o_rows[k])] = "O"
        labels[(k, grid.x_rows[k])] = "X"
    p, q = grid.o_rows[c], grid.x_rows[c]
    r, s = grid.o_rows[c + 1], grid.x_rows[c + 1]
    del labels[(c, q)], labels[(c + 1, r)]
    labels[(c, r)] = "O"
    labels[(c + 1, q)] = "X"
    by_row: Dict[int, List[int]] = {}
    by_column: Dict[int, List[int]] = {}
    for k, row in labels:
        by_row.setdefault(row, []).append(k)
        by_column.setdefault(k, []).append(row)

    def flip(position: Tuple[int, int]) -> None:
        labels[position] = "O" if labels[position] == "X" else "X"

    current = (c + 1, min(q, s))
    flip(current)
    along_row = True
    for _ in range(2 * n):
        k, row = current
        if along_row:
            other = next(_ for _ in by_row[row] if _ != k)
            current = (other, row)
            flip(current)
            if other == c:
                break
            if other == c + 1:
                raise NotUnorientableConfiguration(
                    f"The band at column {c} is compatible with the orientation."
                )
        else:
            other = next(_ for _ in by_column[k] if _ != row)
            current = (k, other)
            flip(current)
        along_row = not along_row
    o_rows, x_rows = [0] * n, [0] * n
    for (k, row), label in labels.items():
        if label == "O":
            o_rows[k] = row
        else:
            x_rows[k] = row
    return validate(o_rows, x_rows)


def _marking_self_pairing(grid: GridDiagram) -> int:
    o_points, x_points = marking_points(grid, "O"), marking_points(grid, "X")
    return i_pairing(o_points, o_points) + i_pairing(x_points, x_points)


def unorientable_band(grid: GridDiagram, column: int) -> Tuple[GridDiagram, SaddleBand]:
    """Resolve the band at ``column`` and compute its Euler number.

    The exchange moves the X of ``column`` and the O of ``column + 1`` across
    the vertical circle between the two columns; the relabeling keeps the
    marking positions. The sum of the Maslov gradings of a state therefore
    changes by ``2`` on the arc ``A`` plus the constant

        I(O', O') + I(X', X') - I(O, O) - I(X, X) - 2[x_c > o_c+1] + ℓ - ℓ'

    which is the ``2δ``-shift ``(e - 2) / 2`` of ``ν``. ``ε`` is what is left
    of ``e`` after the writhe difference; it is ``+1`` for the standard
    picture of the move.
    """
    resolved = _resolve_unorientable(grid, column)
    q, r = grid.x_rows[column], grid.o_rows[column + 1]
    shift = (
        _marking_self_pairing(resolved)
        - _marking_self_pairing(grid)
        - 2 * int(q > r)
        + trace_components(grid).component_count
        - trace_components(resolved).component_count
    )
    first, second = PlanarRealization(grid), PlanarRealization(resolved)
    epsilon = 2 * shift + 2 - writhe(first) + writhe(second)
    euler_number = band_euler_number(first, second, epsilon)
    return resolved, SaddleBand(
        columns=(column, column + 1),
        orientable=False,
        epsilon=epsilon,
        euler_number=euler_number,
    )


def band_euler_number(
    first: PlanarRealization, second: PlanarRealization, epsilon: int
) -> int:
    """``e(B) = Wr(D1) - Wr(D2) + ε``."""
    return writhe(first) - writhe(second) + epsilon


def unorientable_saddle(
    grid: GridDiagram, column: int, configuration: Optional[Configuration] = None
) -> Tuple[GridDiagram, ChainMap, ChainMap, int]:
    """Unorientable band move between ``column`` and ``column + 1``.

    ``ν`` multiplies states whose component on the circle between the
    columns lies in ``(x_c, o_c+1]`` by ``U``; ``ν'`` multiplies the others.
    ``ν`` shifts ``2δ`` by ``(e - 2) / 2`` and ``ν'`` by ``-(2 + e) / 2``.

    Returns:
        the resolved grid, ``ν``, ``ν'`` and the Euler number ``e``
    Raises:
        NotUnorientableConfiguration: if the band respects the orientation
            or its Euler number is odd
    """
    if not 0 <= column < grid.n - 1:
        raise NotUnorientableConfiguration(f"Column {column} has no right neighbour.")
    resolved, band = unorientable_band(grid, column)
    e = band.euler_number
    if e % 2:
        raise NotUnorientableConfiguration(
            f"The band at column {column} has odd Euler number {e}."
        )
    complex_, complex_resolved = _complexes(grid, resolved, configuration)
    in_arc = _arc_membership(
        grid.n, column + 1, grid.x_rows[column], grid.o_rows[column + 1]
    )
    nu = _diagonal_map(complex_, complex_resolved, in_arc, 1, "ν", (e - 2) // 2)
    nu_prime = _diagonal_map(complex_resolved, complex_, in_arc, 0, "ν'", -(2 + e) // 2)
    log.debug(f"Unorientable saddle at column {column}: e = {e}, ε = {band.epsilon}.")
    return resolved, nu, nu_prime, e


def _kernel(rows: List[int]) -> List[int]:
    """Kernel of the map whose i-th basis vector goes to ``rows[i]``, as bitsets."""
    pivots: Dict[int, Tuple[int, int]] = {}
    kernel = []
    for index, row in enumerate(rows):
        combination = 1 << index
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = (row, combination)
                break
            pivot_row, pivot_combination = pivots[top]
            row ^= pivot_row
            combination ^= pivot_combination
        if not row:
            kernel.append(combination)
    return kernel


def _rows_at_u1(entries: MapEntries, size: int) -> List[int]:
    rows = [0] * size
    for source, row in entries.items():
        for target, polynomial in row.items():
            if bin(polynomial).count("1") % 2:
                rows[source] ^= 1 << target
    return rows


def _apply(rows: List[int], vector: int) -> int:
    result = 0
    index = 0
    while vector:
        if vector & 1:
            result ^= rows[index]
        vector >>= 1
        index += 1
    return result


def localized_homology_dimension(complex_: UComplex) -> int:
    """Dimension of the homology at ``U = 1``."""
    return complex_.size - 2 * gf2_rank(
        _rows_at_u1(differential_entries(complex_), complex_.size)
    )


def localized_rank(chain_map: ChainMap) -> int:
    """Rank of the map induced on homology at ``U = 1``."""
    source_d = _rows_at_u1(differential_entries(chain_map.source), chain_map.source.size)
    target_d = _rows_at_u1(differential_entries(chain_map.target), chain_map.target.size)
    f = _rows_at_u1(chain_map.entries, chain_map.source.size)
    images = [_apply(f, cycle) for cycle in _kernel(source_d)]
    return gf2_rank(images + target_d) - gf2_rank(target_d)


def induced_isomorphism_at_u1(chain_map: ChainMap) -> bool:
    """Whether ``chain_map`` induces an isomorphism on homology at ``U = 1``."""
    rank = localized_rank(chain_map)
    return (
        rank
        == localized_homology_dimension(chain_map.source)
        == localized_homology_dimension(chain_map.target)
    )
