"""Grid diagrams, grid states and their combinatorial data.

Coordinates follow one fixed fundamental domain: the state component on
vertical circle ``i`` sits at the lattice point ``(i, rows[i])`` and the
markings of column ``i`` sit at the square centres ``(i + 1/2, row + 1/2)``.
Internally all points are stored with doubled coordinates so that strict
south-west comparisons are integer comparisons.

Columns are oriented from their X to their O, rows from their O to their X,
and vertical strands cross over horizontal ones.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger as log

from .types import (
    CoincidentMarkings,
    EmptyGrid,
    GridParseError,
    NotAPermutation,
)

Point = Tuple[int, int, int]
"""A doubled-coordinate point ``(2x, 2y, coefficient)``."""


def _is_permutation(values: Sequence[int], n: int) -> bool:
    return sorted(values) == list(range(n))


@dataclass(frozen=True)
class GridDiagram:
    """A toroidal grid of index ``n``.

    Attributes:
        o_rows: row of the O-marking in each column
        x_rows: row of the X-marking in each column
    """

    o_rows: Tuple[int, ...]
    x_rows: Tuple[int, ...]

    @property
    def n(self) -> int:
        """The grid index."""
        return len(self.o_rows)

    @property
    def o_array(self) -> np.ndarray:
        """O rows as an integer array."""
        return np.asarray(self.o_rows, dtype=np.int64)

    @property
    def x_array(self) -> np.ndarray:
        """X rows as an integer array."""
        return np.asarray(self.x_rows, dtype=np.int64)

    def o_column(self, row: int) -> int:
        """Column of the O-marking in ``row``."""
        return self.o_rows.index(row)

    def x_column(self, row: int) -> int:
        """Column of the X-marking in ``row``."""
        return self.x_rows.index(row)

    def __str__(self) -> str:
        return f"GridDiagram(O={list(self.o_rows)}, X={list(self.x_rows)})"


@dataclass(frozen=True)
class GridState:
    """A grid state, i.e. a permutation matching vertical to horizontal circles."""

    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not _is_permutation(self.rows, len(self.rows)):
            raise NotAPermutation(f"State rows {list(self.rows)} are not a permutation.")

    def swapped(self, i: int, j: int) -> "GridState":
        """The state with the components on circles ``i`` and ``j`` exchanged."""
        rows = list(self.rows)
        rows[i], rows[j] = rows[j], rows[i]
        return GridState(tuple(rows))


@dataclass(frozen=True)
class PlanarRealization:
    """A grid cut open along a choice of fundamental domain.

    Attributes:
        grid: the toroidal grid
        shift: cyclic offsets ``(a, b)``; column ``a`` and row ``b`` become the
            leftmost column and the bottom row of the planar picture
    """

    grid: GridDiagram
    shift: Tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        a, b = self.shift
        if not (0 <= a < self.grid.n and 0 <= b < self.grid.n):
            raise ValueError(f"Shift {self.shift} outside [0, {self.grid.n}).")

    def planar_grid(self) -> GridDiagram:
        """The grid redrawn so that the chosen fundamental domain starts at the origin."""
        a, b = self.shift
        n = self.grid.n
        o_rows = tuple((self.grid.o_rows[(k + a) % n] - b) % n for k in range(n))
        x_rows = tuple((self.grid.x_rows[(k + a) % n] - b) % n for k in range(n))
        return GridDiagram(o_rows, x_rows)

    def planar_state(self, state: GridState) -> GridState:
        """``state`` expressed in the shifted fundamental domain."""
        a, b = self.shift
        n = self.grid.n
        return GridState(tuple((state.rows[(k + a) % n] - b) % n for k in range(n)))


@dataclass(frozen=True)
class LinkStructure:
    """Components of the link presented by a grid.

    Attributes:
        component_count: number of components ℓ
        component_of_column: component id of every column
        component_of_row: component id of every row
        column_direction: +1 if the vertical strand of a column runs upwards
        row_direction: +1 if the horizontal strand of a row runs rightwards
    """

    component_count: int
    component_of_column: Tuple[int, ...]
    component_of_row: Tuple[int, ...]
    column_direction: Tuple[int, ...] = field(default=())
    row_direction: Tuple[int, ...] = field(default=())


@dataclass(frozen=True)
class Crossing:
    """A crossing of the planar projection.

    Attributes:
        column: column of the over-strand (vertical)
        row: row of the under-strand (horizontal)
        sign: +1 or -1 with respect to the link orientation
    """

    column: int
    row: int
    sign: int


@dataclass(frozen=True)
class Gradings:
    """Gradings of a grid state.

    Attributes:
        maslov_o: M_O
        maslov_x: M_X
        alexander: A, a half-integer for links
        delta2: twice the δ-grading
    """

    maslov_o: int
    maslov_x: int
    alexander: Fraction
    delta2: int

    @property
    def delta(self) -> Fraction:
        """The δ-grading."""
        return Fraction(self.delta2, 2)


def validate(o_rows: Sequence[int], x_rows: Sequence[int]) -> GridDiagram:
    """Build a grid diagram from two permutations.

    Args:
        o_rows: row of the O-marking per column
        x_rows: row of the X-marking per column
    Returns:
        the grid diagram
    Raises:
        EmptyGrid: if no columns are given
        NotAPermutation: if either array is not a permutation of ``0..n-1``
        CoincidentMarkings: if an O and an X share a square
    """
    o_rows = tuple(int(_) for _ in o_rows)
    x_rows = tuple(int(_) for _ in x_rows)
    n = len(o_rows)
    if n == 0:
        raise EmptyGrid("A grid needs at least one column.")
    if len(x_rows) != n:
        raise NotAPermutation(
            f"O and X arrays differ in length ({n} != {len(x_rows)})."
        )
    for name, values in (("O", o_rows), ("X", x_rows)):
        if not _is_permutation(values, n):
            raise NotAPermutation(f"{name} rows {list(values)} are not a permutation.")
    if n >= 2:
        clashes = [i for i in range(n) if o_rows[i] == x_rows[i]]
        if clashes:
            raise CoincidentMarkings(f"O and X coincide in columns {clashes}.")
    return GridDiagram(o_rows, x_rows)


def trace_components(grid: GridDiagram) -> LinkStructure:
    """Partition the columns and rows of ``grid`` into link components.

    Starting from the X of an unvisited column we walk to that column's O,
    then along the O's row to its X, and so on until the walk closes up.
    """
    n = grid.n
    x_column_of_row = [0] * n
    for column, row in enumerate(grid.x_rows):
        x_column_of_row[row] = column
    component_of_column = [-1] * n
    component_of_row = [-1] * n
    count = 0
    for start in range(n):
        if component_of_column[start] >= 0:
            continue
        column = start
        while component_of_column[column] < 0:
            component_of_column[column] = count
            row = grid.o_rows[column]
            component_of_row[row] = count
            column = x_column_of_row[row]
        count += 1
    column_direction = tuple(
        1 if grid.o_rows[i] > grid.x_rows[i] else -1 for i in range(n)
    )
    row_direction = tuple(
        1 if x_column_of_row[r] > grid.o_rows.index(r) else -1 for r in range(n)
    )
    return LinkStructure(
        component_count=count,
        component_of_column=tuple(component_of_column),
        component_of_row=tuple(component_of_row),
        column_direction=column_direction,
        row_direction=row_direction,
    )


def marking_points(grid: GridDiagram, kind: str, coefficient: int = 1) -> List[Point]:
    """The O- or X-markings as doubled-coordinate points."""
    rows = grid.o_rows if kind == "O" else grid.x_rows
    return [(2 * i + 1, 2 * row + 1, coefficient) for i, row in enumerate(rows)]


def state_points(state: GridState, coefficient: int = 1) -> List[Point]:
    """The components of a state as doubled-coordinate points."""
    return [(2 * i, 2 * row, coefficient) for i, row in enumerate(state.rows)]


def i_pairing(first: Iterable[Point], second: Iterable[Point]) -> int:
    """Signed count of pairs with the first point strictly south-west of the second."""
    second = list(second)
    return sum(
        c1 * c2
        for x1, y1, c1 in first
        for x2, y2, c2 in second
        if x1 < x2 and y1 < y2
    )


def j_pairing(first: Iterable[Point], second: Iterable[Point]) -> Fraction:
    """The symmetrized pairing ``J(P, Q) = (I(P, Q) + I(Q, P)) / 2``.

    Points carry coefficients, so formal differences such as ``O - X`` are
    passed as one list with coefficients ``+1`` and ``-1``.
    """
    first, second = list(first), list(second)
    return Fraction(i_pairing(first, second) + i_pairing(second, first), 2)


def _maslov(state_pts: List[Point], marks: List[Point]) -> int:
    return (
        i_pairing(state_pts, state_pts)
        - i_pairing(state_pts, marks)
        - i_pairing(marks, state_pts)
        + i_pairing(marks, marks)
        + 1
    )


def gradings(
    grid: GridDiagram,
    state: GridState,
    shift: Tuple[int, int] = (0, 0),
    component_count: Optional[int] = None,
) -> Gradings:
    """Compute M_O, M_X, A and δ of ``state``.

    Args:
        grid: the grid
        state: a state of ``grid``
        shift: fundamental domain used for the computation; the result does
            not depend on it
        component_count: ℓ, traced from the grid if omitted
    """
    if len(state.rows) != grid.n:
        raise NotAPermutation(f"State of length {len(state.rows)} on index {grid.n}.")
    realization = PlanarRealization(grid, shift)
    planar = realization.planar_grid()
    points = state_points(realization.planar_state(state))
    maslov_o = _maslov(points, marking_points(planar, "O"))
    maslov_x = _maslov(points, marking_points(planar, "X"))
    ell = component_count or trace_components(grid).component_count
    excess = grid.n - ell
    return Gradings(
        maslov_o=maslov_o,
        maslov_x=maslov_x,
        alexander=Fraction(maslov_o - maslov_x - excess, 2),
        delta2=maslov_o + maslov_x + excess,
    )


def maslov_array(states: np.ndarray, marks: np.ndarray) -> np.ndarray:
    """Vectorized Maslov grading of many states against one set of markings.

    Args:
        states: array of shape (count, n) holding state rows
        marks: the rows of the markings per column
    """
    count, n = states.shape
    states = states.astype(np.int64, copy=False)
    total = np.ones(count, dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            total += states[:, i] < states[:, j]
            total += int(marks[i] < marks[j])
        # state point (i, s) is south-west of marking k iff i <= k and s <= m_k
        for k in range(n):
            if i <= k:
                total -= states[:, i] <= marks[k]
            if k < i:
                total -= marks[k] < states[:, i]
    return total


def crossings(grid: GridDiagram, structure: Optional[LinkStructure] = None) -> List[Crossing]:
    """Crossings of the planar projection drawn in the origin fundamental domain."""
    structure = structure or trace_components(grid)
    n = grid.n
    result = []
    for column in range(n):
        low, high = sorted((grid.o_rows[column], grid.x_rows[column]))
        for row in range(low + 1, high):
            left, right = sorted((grid.o_column(row), grid.x_column(row)))
            if left < column < right:
                sign = -structure.column_direction[column] * structure.row_direction[row]
                result.append(Crossing(column, row, sign))
    return result


def writhe(realization: PlanarRealization) -> int:
    """Sum of the crossing signs of the planar projection."""
    return sum(crossing.sign for crossing in crossings(realization.planar_grid()))


def _extrema(grid: GridDiagram, vertical: int, horizontal: int) -> int:
    count = 0
    for column in range(grid.n):
        for row, partner in (
            (grid.o_rows[column], grid.x_rows[column]),
            (grid.x_rows[column], grid.o_rows[column]),
        ):
            other_column = (
                grid.x_column(row) if row == grid.o_rows[column] else grid.o_column(row)
            )
            if (partner - row) * vertical > 0 and (other_column - column) * horizontal > 0:
                count += 1
    return count


def bridge_index(realization: PlanarRealization) -> int:
    """Number of markings that are local maxima of the height ``p2 - p1``.

    A marking is a local maximum when the other marking of its column lies
    below it and the other marking of its row lies to its right.
    """
    return _extrema(realization.planar_grid(), vertical=-1, horizontal=1)


def local_minima(realization: PlanarRealization) -> int:
    """Number of markings that are local minima of the height ``p2 - p1``."""
    return _extrema(realization.planar_grid(), vertical=1, horizontal=-1)


def wrbraid_defect(realization: PlanarRealization) -> Fraction:
    """``J(O - X, O - X) - (b - Wr)``; zero for every planar grid."""
    planar = realization.planar_grid()
    difference = marking_points(planar, "O") + marking_points(planar, "X", -1)
    return j_pairing(difference, difference) - (
        bridge_index(realization) - writhe(realization)
    )


def mirror(grid: GridDiagram) -> GridDiagram:
    """The mirror image, obtained by reversing the order of the columns."""
    return GridDiagram(grid.o_rows[::-1], grid.x_rows[::-1])


def reverse_components(grid: GridDiagram, components: Iterable[int]) -> GridDiagram:
    """Reverse the orientation of the given components by exchanging O and X."""
    structure = trace_components(grid)
    chosen = set(components)
    o_rows, x_rows = list(grid.o_rows), list(grid.x_rows)
    for column in range(grid.n):
        if structure.component_of_column[column] in chosen:
            o_rows[column], x_rows[column] = x_rows[column], o_rows[column]
    return validate(o_rows, x_rows)


def stabilize(grid: GridDiagram, column: int) -> GridDiagram:
    """Stabilize at the X of ``column``.

    The X-marked square is replaced by a 2×2 block carrying X-markings on the
    anti-diagonal and an O in its upper right square. The result presents the
    same oriented link with index ``n + 1``.
    """
    n = grid.n
    if not 0 <= column < n:
        raise ValueError(f"Column {column} outside the grid of index {n}.")
    row = grid.x_rows[column]

    def shift_row(value: int) -> int:
        return value + 1 if value > row else value

    o_rows: List[int] = []
    x_rows: List[int] = []
    for k in range(n):
        o_rows.append(shift_row(grid.o_rows[k]))
        x_rows.append(row + 1 if k == column else shift_row(grid.x_rows[k]))
        if k == column:
            o_rows.append(row + 1)
            x_rows.append(row)
    return validate(o_rows, x_rows)


def disjoint_union(first: GridDiagram, second: GridDiagram) -> GridDiagram:
    """Block sum of two grids; presents the split union of their links."""
    shift = first.n
    return validate(
        first.o_rows + tuple(row + shift for row in second.o_rows),
        first.x_rows + tuple(row + shift for row in second.x_rows),
    )


def add_unknots(grid: GridDiagram, count: int) -> GridDiagram:
    """Add ``count`` split unknotted components, each as an index-2 block."""
    result = grid
    for _ in range(count):
        result = disjoint_union(result, GridDiagram((0, 1), (1, 0)))
    return result


def random_grid(n: int, rng: np.random.Generator) -> GridDiagram:
    """Draw a random valid grid of index ``n``."""
    if n < 2:
        return validate([0], [0])
    while True:
        o_rows = rng.permutation(n)
        x_rows = rng.permutation(n)
        if np.all(o_rows != x_rows):
            return validate(o_rows.tolist(), x_rows.tolist())


def _parse_row(line: str, label: str) -> List[int]:
    head, _, tail = line.partition(":")
    if head.strip() != label:
        raise GridParseError(f"Expected a line starting with '{label}:', got {line!r}.")
    try:
        return [int(_) for _ in tail.split()]
    except ValueError as error:
        raise GridParseError(f"Non-integer entry in {line!r}.") from error


def parse_grid_document(text: str) -> Tuple[GridDiagram, List[str]]:
    """Parse the grid text format.

    The format has the index on the first line, then ``O: ...`` and
    ``X: ...`` with zero-indexed rows. Lines starting with ``#`` are
    comments and are returned without the leading marker.
    """
    comments: List[str] = []
    lines: List[str] = []
    for raw in text.splitlines():
        if raw.startswith("#"):
            comments.append(raw[1:].strip())
        elif raw.strip():
            lines.append(raw.strip())
    if len(lines) != 3:
        raise GridParseError(f"Expected 3 content lines, found {len(lines)}.")
    try:
        n = int(lines[0])
    except ValueError as error:
        raise GridParseError(f"Grid index {lines[0]!r} is not an integer.") from error
    o_rows = _parse_row(lines[1], "O")
    x_rows = _parse_row(lines[2], "X")
    if len(o_rows) != n or len(x_rows) != n:
        raise GridParseError(f"Rows do not match the declared index {n}.")
    return validate(o_rows, x_rows), comments


def parse_grid(text: str) -> GridDiagram:
    """Parse the grid text format, discarding comments."""
    return parse_grid_document(text)[0]


def dump_grid(grid: GridDiagram, comments: Sequence[str] = ()) -> str:
    """Serialize ``grid``; ``parse_grid_document`` inverts this exactly."""
    lines = [f"# {comment}" for comment in comments]
    lines.append(str(grid.n))
    lines.append("O: " + " ".join(str(_) for _ in grid.o_rows))
    lines.append("X: " + " ".join(str(_) for _ in grid.x_rows))
    return "\n".join(lines) + "\n"


def read_grid(path: Union[str, Path]) -> GridDiagram:
    """Read a grid file."""
    path = Path(path)
    log.debug(f"Reading grid from {path}.")
    with path.open("r", encoding="utf8") as file:
        return parse_grid(file.read())
