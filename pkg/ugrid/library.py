"""Built-in grid diagrams with expected invariants.

Every expected value carries a provenance tag. ``paper`` values are
published results; ``derived`` values follow from them by mirroring, by
closed formulas or by the signature computation, and are checked the same
way.
"""

from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple

from loguru import logger as log

from .grid import GridDiagram, read_grid, validate
from .homology import GradedModule
from .types import InputError, NotCoprime

Provenance = Literal["paper", "derived"]

BUILTIN_PREFIX = "builtin:"


@dataclass(frozen=True)
class Expected:
    """An expected value with its provenance."""

    value: Any
    provenance: Provenance


@dataclass(frozen=True)
class KnotLibraryEntry:
    """A named grid and the values it is expected to produce.

    Attributes:
        name: library name, used as ``builtin:<name>``
        grid: the grid diagram
        description: what the grid presents
        expected: expected values keyed by ``upsilon``, ``upsilon_set`` (doubled),
            ``renormalized`` (doubled), ``sigma``, ``determinant`` and ``module``
    """

    name: str
    grid: GridDiagram
    description: str
    expected: Dict[str, Expected] = field(default_factory=dict)

    def expected_with(self, provenance: Provenance) -> Dict[str, Any]:
        """Expected values of one provenance."""
        return {
            key: item.value
            for key, item in self.expected.items()
            if item.provenance == provenance
        }


def torus_grid(p: int, q: int) -> GridDiagram:
    """Index ``p + q`` grid of the positive torus knot ``T(p, q)``.

    Raises:
        NotCoprime: if ``gcd(p, q) != 1`` or a parameter is not positive
    """
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise NotCoprime(f"T({p}, {q}) is not a torus knot.")
    n = p + q
    return validate(
        [(n - j) % n for j in range(n)],
        [(n - j + p) % n for j in range(n)],
    )


def pretzel_grid(twists: Sequence[int]) -> GridDiagram:
    """Grid of the pretzel link ``P(p_1, ..., p_k)``.

    Region ``i`` gets its own block of ``|p_i| + 2`` columns holding a
    staircase: at every step the left strand turns right under the right
    strand and continues up a new column. Regions with ``p_i < 0`` use the
    block mirrored left to right. Caps above and cups below every staircase
    join neighbouring regions; the outermost cap and cup take the first and
    the last row. The grid index is ``2k + Σ|p_i|``.

    Each component is oriented along its first column from bottom to top.

    Raises:
        InputError: if there are fewer than two regions
    """
    k = len(twists)
    if k < 2:
        raise InputError(f"A pretzel link needs two regions, got {list(twists)}.")
    n = 2 * k + sum(abs(p) for p in twists)
    column_rows: List[List[int]] = [[] for _ in range(n)]
    row_columns: List[List[int]] = [[] for _ in range(n)]

    def corner(column: int, row: int) -> None:
        column_rows[column].append(row)
        row_columns[row].append(column)

    bottoms, tops = [], []
    first_column, row = 0, k
    for twist in twists:
        m = abs(twist)
        columns = list(range(first_column, first_column + m + 2))
        if twist < 0:
            columns.reverse()
        for step in range(1, m + 1):
            corner(columns[step - 1], row)
            corner(columns[step + 1], row)
            row += 1
        bottoms.append(sorted(columns[:2]))
        tops.append(sorted(columns[m : m + 2]))
        first_column += m + 2
    for region in range(k - 1):
        corner(bottoms[region][1], 1 + region)
        corner(bottoms[region + 1][0], 1 + region)
        corner(tops[region][1], row + region)
        corner(tops[region + 1][0], row + region)
    corner(bottoms[0][0], 0)
    corner(bottoms[-1][1], 0)
    corner(tops[0][0], n - 1)
    corner(tops[-1][1], n - 1)

    o_rows: List[Optional[int]] = [None] * n
    x_rows: List[Optional[int]] = [None] * n
    for start in range(n):
        column, x_row = start, min(column_rows[start])
        while o_rows[column] is None:
            o_row = next(row for row in column_rows[column] if row != x_row)
            x_rows[column], o_rows[column] = x_row, o_row
            column = next(other for other in row_columns[o_row] if other != column)
            x_row = o_row
    return validate(o_rows, x_rows)


def _entry(
    name: str,
    o_rows: List[int],
    x_rows: List[int],
    description: str,
    **expected: Tuple[Any, Provenance],
) -> KnotLibraryEntry:
    return KnotLibraryEntry(
        name=name,
        grid=validate(o_rows, x_rows),
        description=description,
        expected={key: Expected(*item) for key, item in expected.items()},
    )


def _torus_entry(
    name: str, p: int, q: int, **expected: Tuple[Any, Provenance]
) -> KnotLibraryEntry:
    grid = torus_grid(p, q)
    return _entry(
        name, list(grid.o_rows), list(grid.x_rows), f"torus knot T({p},{q})", **expected
    )


def _pretzel_entry(
    name: str, twists: Sequence[int], **expected: Tuple[Any, Provenance]
) -> KnotLibraryEntry:
    grid = pretzel_grid(twists)
    return _entry(
        name,
        list(grid.o_rows),
        list(grid.x_rows),
        f"pretzel link P({','.join(str(p) for p in twists)})",
        **expected,
    )


LIBRARY: Dict[str, KnotLibraryEntry] = {
    entry.name: entry
    for entry in [
        _entry(
            "unknot2",
            [0, 1],
            [1, 0],
            "unknot",
            upsilon=(0, "paper"),
            sigma=(0, "paper"),
            module=(GradedModule(free=(0,)), "paper"),
        ),
        _entry(
            "unknot3",
            [0, 1, 2],
            [1, 2, 0],
            "unknot",
            upsilon=(0, "paper"),
            sigma=(0, "paper"),
            module=(GradedModule(free=(0,)), "paper"),
        ),
        _entry(
            "unlink2",
            [0, 1, 2, 3],
            [1, 0, 3, 2],
            "two-component unlink",
            upsilon_set=((-2, 0), "paper"),
            sigma=(0, "derived"),
        ),
        _entry(
            "hopf",
            [2, 1, 0, 3],
            [0, 3, 2, 1],
            "positive Hopf link",
            upsilon_set=((-2, -2), "paper"),
            renormalized=((0, 0), "paper"),
            sigma=(-1, "derived"),
        ),
        _entry(
            "hopf-negative",
            [3, 0, 1, 2],
            [1, 2, 3, 0],
            "negative Hopf link",
            upsilon_set=((0, 0), "derived"),
            renormalized=((0, 0), "derived"),
            sigma=(1, "derived"),
        ),
        _entry(
            "trefoil",
            [0, 4, 3, 2, 1],
            [3, 2, 1, 0, 4],
            "right-handed trefoil",
            upsilon=(-1, "paper"),
            sigma=(-2, "paper"),
            determinant=(3, "derived"),
        ),
        _entry(
            "trefoil-left",
            [1, 2, 3, 4, 0],
            [4, 0, 1, 2, 3],
            "left-handed trefoil",
            upsilon=(1, "derived"),
            sigma=(2, "derived"),
            determinant=(3, "derived"),
        ),
        _entry(
            "figure-eight",
            [1, 0, 3, 2, 4, 5],
            [4, 2, 1, 5, 0, 3],
            "figure-eight knot",
            upsilon=(0, "paper"),
            sigma=(0, "derived"),
            determinant=(5, "derived"),
        ),
        _torus_entry(
            "torus-2-5",
            2,
            5,
            upsilon=(-2, "derived"),
            sigma=(-4, "derived"),
        ),
        _entry(
            "torus-3-4",
            [0, 6, 5, 4, 3, 2, 1],
            [3, 2, 1, 0, 6, 5, 4],
            "torus knot T(3,4)",
            upsilon=(-2, "paper"),
            sigma=(-6, "paper"),
            module=(GradedModule(free=(-4,), torsion=((-6, 1), (-6, 1))), "paper"),
        ),
        _entry(
            "torus-3-4-mirror",
            [1, 2, 3, 4, 5, 6, 0],
            [4, 5, 6, 0, 1, 2, 3],
            "mirror of the torus knot T(3,4)",
            upsilon=(2, "derived"),
            sigma=(6, "derived"),
            module=(GradedModule(free=(4,), torsion=((6, 1), (6, 1))), "derived"),
        ),
        _torus_entry(
            "torus-3-5",
            3,
            5,
            upsilon=(-3, "paper"),
            sigma=(-8, "paper"),
        ),
        _pretzel_entry(
            "pretzel-2-m1-m2-1",
            (2, -1, -2, 1),
            upsilon_set=((-2, 0), "paper"),
            sigma=(0, "derived"),
            determinant=(0, "derived"),
        ),
        _pretzel_entry(
            "pretzel-3-m2-m3-2",
            (3, -2, -3, 2),
            upsilon_set=((-2, 0), "paper"),
            determinant=(0, "derived"),
        ),
    ]
}
"""The shipped grids, by name."""


def get_builtin(name: str) -> KnotLibraryEntry:
    """Look up a library entry.

    Raises:
        InputError: if no entry has that name
    """
    try:
        return LIBRARY[name]
    except KeyError as error:
        raise InputError(
            f"No built-in grid named {name!r}; choose one of {', '.join(LIBRARY)}."
        ) from error


def builtins_up_to(index: int) -> List[KnotLibraryEntry]:
    """Library entries with grid index at most ``index``."""
    return [entry for entry in LIBRARY.values() if entry.grid.n <= index]


def resolve_grid(spec: str) -> Tuple[str, GridDiagram]:
    """Resolve ``builtin:<name>`` or a grid file path.

    Returns:
        a descriptor for reports and the grid
    """
    if spec.startswith(BUILTIN_PREFIX):
        entry = get_builtin(spec[len(BUILTIN_PREFIX) :])
        log.debug(f"Using built-in {entry.name}: {entry.description}.")
        return spec, entry.grid
    path = Path(spec)
    if not path.is_file():
        raise InputError(f"{spec} is neither a built-in nor a readable grid file.")
    return str(path), read_grid(path)
