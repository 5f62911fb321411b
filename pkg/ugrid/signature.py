"""Link signatures from grid projections.

The projection of a planar grid cuts the plane into regions. Each region is
a union of the cells ``(i, j)``, ``0 <= i, j <= n``, centred on the lattice
points; the vertical segment of column ``c`` separates ``(c, j)`` from
``(c + 1, j)`` and the horizontal segment of row ``r`` separates ``(i, r)``
from ``(i, r + 1)``. A checkerboard colouring is the parity of the number of
vertical segments to the left of a cell.

The signature follows the Gordon-Litherland formula ``σ = sign(G) - μ`` with
the Goeritz form ``G`` on the unshaded regions.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from loguru import logger as log

from .grid import GridDiagram, PlanarRealization, crossings, trace_components
from .types import DegenerateProjection, NotInTable

Cell = Tuple[int, int]

TORUS_SIGNATURES: Dict[Tuple[int, int], int] = {
    (3, 5): -8,
    (3, 7): -8,
    (5, 9): -24,
    (5, 11): -24,
}
"""Tabulated signatures of torus knots too large for grid computations."""


@dataclass
class CheckerboardSurface:
    """A checkerboard surface of a grid projection.

    Attributes:
        shaded_parity: colour parity of the shaded cells
        regions: region id of every cell, the unbounded region has id 0
        unshaded: ids of the unshaded regions, in Goeritz order
        goeritz: the Goeritz matrix on all unshaded regions
        correction: μ, the sum of η over type II crossings
    """

    shaded_parity: int
    regions: Dict[Cell, int]
    unshaded: List[int]
    goeritz: List[List[int]]
    correction: int

    def reduced_goeritz(self) -> List[List[int]]:
        """The Goeritz matrix with the first unshaded region removed."""
        return [row[1:] for row in self.goeritz[1:]]


def _separations(grid: GridDiagram) -> Tuple[Dict[int, range], Dict[int, range]]:
    vertical = {}
    horizontal = {}
    for column in range(grid.n):
        low, high = sorted((grid.o_rows[column], grid.x_rows[column]))
        vertical[column] = range(low + 1, high + 1)
    for row in range(grid.n):
        left, right = sorted((grid.o_column(row), grid.x_column(row)))
        horizontal[row] = range(left + 1, right + 1)
    return vertical, horizontal


def _colour(cell: Cell, vertical: Dict[int, range]) -> int:
    i, j = cell
    return sum(1 for column in range(i) if j in vertical[column]) % 2


def _regions(n: int, vertical: Dict[int, range], horizontal: Dict[int, range]) -> Dict[Cell, int]:
    """Flood fill the cells; every border cell belongs to the unbounded region 0."""
    regions: Dict[Cell, int] = {}
    border = [
        (i, j) for i in range(n + 1) for j in range(n + 1) if i in (0, n) or j in (0, n)
    ]
    starts = [border] + [[(i, j)] for i in range(n + 1) for j in range(n + 1)]
    count = 0
    for start in starts:
        if all(cell in regions for cell in start):
            continue
        queue = deque(start)
        for cell in start:
            regions[cell] = count
        while queue:
            i, j = queue.popleft()
            steps = []
            if i > 0 and j not in vertical[i - 1]:
                steps.append((i - 1, j))
            if i < n and j not in vertical[i]:
                steps.append((i + 1, j))
            if j > 0 and i not in horizontal[j - 1]:
                steps.append((i, j - 1))
            if j < n and i not in horizontal[j]:
                steps.append((i, j + 1))
            for step in steps:
                if step not in regions:
                    regions[step] = count
                    queue.append(step)
        count += 1
    return regions


def checkerboard_surface(
    realization: PlanarRealization, shaded_parity: int = 1
) -> CheckerboardSurface:
    """Build the checkerboard surface whose shaded cells have ``shaded_parity``.

    At a crossing the quadrants are the cells ``(c, r)``, ``(c + 1, r)``,
    ``(c, r + 1)`` and ``(c + 1, r + 1)``. ``η = +1`` when the south-west
    quadrant is unshaded. A crossing is of type II when its oriented smoothing
    joins the two shaded quadrants.
    """
    grid = realization.planar_grid()
    n = grid.n
    structure = trace_components(grid)
    vertical, horizontal = _separations(grid)
    regions = _regions(n, vertical, horizontal)

    def shaded(cell: Cell) -> bool:
        return _colour(cell, vertical) == shaded_parity

    unshaded = sorted({region for cell, region in regions.items() if not shaded(cell)})
    if not unshaded:
        raise DegenerateProjection(f"No unshaded region in the projection of {grid}.")
    position = {region: index for index, region in enumerate(unshaded)}
    goeritz = [[0] * len(unshaded) for _ in unshaded]
    correction = 0
    for crossing in crossings(grid, structure):
        c, r = crossing.column, crossing.row
        south_west, south_east = (c, r), (c + 1, r)
        north_west, north_east = (c, r + 1), (c + 1, r + 1)
        eta = -1 if shaded(south_west) else 1
        if eta == 1:
            first, second = south_west, north_east
        else:
            first, second = south_east, north_west
        a, b = position[regions[first]], position[regions[second]]
        if a != b:
            goeritz[a][b] -= eta
            goeritz[b][a] -= eta
        joins_diagonal = (
            structure.column_direction[c] * structure.row_direction[r] == 1
        )
        joined = south_west if joins_diagonal else south_east
        if shaded(joined):
            correction += eta
    for index, row in enumerate(goeritz):
        row[index] = -sum(value for other, value in enumerate(row) if other != index)
    return CheckerboardSurface(
        shaded_parity=shaded_parity,
        regions=regions,
        unshaded=unshaded,
        goeritz=goeritz,
        correction=correction,
    )


def diagonalize(matrix: List[List[int]]) -> List[Fraction]:
    """Diagonal entries of an exact congruence diagonalization of a symmetric matrix.

    Zero rows are reported as zero entries.
    """
    a = [[Fraction(value) for value in row] for row in matrix]
    size = len(a)
    pivots: List[Fraction] = []
    for k in range(size):
        if a[k][k] == 0:
            partner = next((j for j in range(k + 1, size) if a[j][j] != 0), None)
            if partner is not None:
                a[k], a[partner] = a[partner], a[k]
                for row in a:
                    row[k], row[partner] = row[partner], row[k]
            else:
                partner = next((j for j in range(k + 1, size) if a[k][j] != 0), None)
                if partner is None:
                    pivots.append(Fraction(0))
                    continue
                for column in range(size):
                    a[k][column] += a[partner][column]
                for row in a:
                    row[k] += row[partner]
        pivot = a[k][k]
        pivots.append(pivot)
        for j in range(k + 1, size):
            factor = a[j][k] / pivot
            if factor:
                for column in range(k, size):
                    a[j][column] -= factor * a[k][column]
                for row in a:
                    row[j] -= factor * row[k]
    return pivots


def matrix_signature(matrix: List[List[int]]) -> int:
    """Number of positive minus number of negative eigenvalues, computed exactly."""
    pivots = diagonalize(matrix)
    return sum(1 for p in pivots if p > 0) - sum(1 for p in pivots if p < 0)


def signature_from_grid(realization: PlanarRealization, shaded_parity: int = 1) -> int:
    """σ of the oriented link presented by the planar grid."""
    surface = checkerboard_surface(realization, shaded_parity)
    sigma = matrix_signature(surface.reduced_goeritz()) - surface.correction
    log.debug(
        f"σ = {sigma} from a Goeritz form on {len(surface.unshaded)} regions, "
        f"μ = {surface.correction}."
    )
    return sigma


def determinant_from_grid(realization: PlanarRealization) -> int:
    """The link determinant ``|det G|`` of the reduced Goeritz matrix."""
    result = Fraction(1)
    for pivot in diagonalize(checkerboard_surface(realization).reduced_goeritz()):
        result *= pivot
    return abs(int(result))


def signature_torus_check(p: int, q: int) -> int:
    """Tabulated signature of ``T(p, q)``.

    Raises:
        NotInTable: if ``(p, q)`` is not tabulated
    """
    try:
        return TORUS_SIGNATURES[(p, q)]
    except KeyError as error:
        raise NotInTable(f"T({p}, {q}) is not among {sorted(TORUS_SIGNATURES)}.") from error
