"""Crossing change maps between two grids differing by a column swap.

The two grids are drawn on one torus: the vertical circle between the
exchanged columns is replaced by two curves ``β`` and ``γ`` that cross once
between any two consecutive markings of the two columns. Heights are scaled
by four, so rows sit at ``4r``, markings at ``4m + 2`` and the crossing above
a marking at ``4m + 3``. ``β`` is the circle of the positive grid; ``γ``
passes left of the markings of the left column and right of the markings of
the right column.

A polygon spans the circles ``j`` and ``c + 1`` and is a rectangle whose
side on ``c + 1`` is cut along ``γ`` over some heights. Its weight is the
rectangle weight corrected by the markings gained or lost along ``γ``.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger as log

from .cobordism import ChainMap, Homotopy, MapEntries, accumulate
from .complex import UComplex, build_complex, enumerate_states, state_keys
from .grid import GridDiagram, validate
from .types import Configuration, InvalidCrossingColumns

_POLYGONS = {
    # kind: {side: (ordering of the special points, arcs followed on γ)}
    "N": {"R": ("s", [("B", "s")]), "L": ("s", [("s", "T")])},
    "P": {"R": ("t", [("t", "T")]), "L": ("t", [("B", "t")])},
    "H+": {"R": ("ts", [("t", "s")]), "L": ("st", [("s", "t")])},
    "H-": {"R": ("st", [("B", "s"), ("t", "T")]), "L": ("ts", [("s", "T"), ("B", "t")])},
}


@dataclass
class CrossingColumns:
    """The four markings of two adjacent columns.

    Attributes:
        column: the left column ``c``
        left: rows of the O and X of column ``c``
        right: rows of the O and X of column ``c + 1``
    """

    column: int
    left: Tuple[int, int]
    right: Tuple[int, int]

    @classmethod
    def of(cls, grid: GridDiagram, column: int) -> "CrossingColumns":
        """Read the markings and check that they interleave."""
        if not 0 <= column < grid.n - 1:
            raise InvalidCrossingColumns(f"Column {column} has no right neighbour.")
        left = (grid.o_rows[column], grid.x_rows[column])
        right = (grid.o_rows[column + 1], grid.x_rows[column + 1])
        order = sorted([(row, 0) for row in left] + [(row, 1) for row in right])
        if len({row for row, _ in order}) != 4 or [side for _, side in order] not in (
            [0, 1, 0, 1],
            [1, 0, 1, 0],
        ):
            raise InvalidCrossingColumns(
                f"Markings of columns {column}, {column + 1} do not interleave."
            )
        return cls(column, left, right)

    def is_positive(self) -> bool:
        """Whether the marking following the right X, going up, is the left X."""
        rows = sorted(self.left + self.right)
        following = rows[(rows.index(self.right[1]) + 1) % 4]
        return following == self.left[1]


def swap_columns(grid: GridDiagram, column: int) -> GridDiagram:
    """Exchange two adjacent columns."""
    o_rows, x_rows = list(grid.o_rows), list(grid.x_rows)
    o_rows[column], o_rows[column + 1] = o_rows[column + 1], o_rows[column]
    x_rows[column], x_rows[column + 1] = x_rows[column + 1], x_rows[column]
    return validate(o_rows, x_rows)


def orient_crossing(grid: GridDiagram, column: int) -> Tuple[GridDiagram, GridDiagram]:
    """Order ``grid`` and its column swap as ``(positive, negative)``."""
    columns = CrossingColumns.of(grid, column)
    swapped = swap_columns(grid, column)
    if columns.is_positive():
        return grid, swapped
    return swapped, grid


def _in_arc(height, start, end, period: int) -> np.ndarray:
    return (height - start) % period < (end - start) % period


def _polygons(
    grid: GridDiagram, column: int, kind: str, states: np.ndarray, keys: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sources, targets and weights of all empty polygons of one kind."""
    n = grid.n
    period = 4 * n
    circle = column + 1
    o_rows, x_rows = grid.o_array, grid.x_array
    heights = {"s": 4 * x_rows[column] + 3, "t": 4 * x_rows[circle] + 3}
    left_marks = [4 * grid.o_rows[column] + 2, 4 * grid.x_rows[column] + 2]
    right_marks = [4 * grid.o_rows[circle] + 2, 4 * grid.x_rows[circle] + 2]
    ids = np.arange(len(states))
    found_sources: List[np.ndarray] = []
    found_targets: List[np.ndarray] = []
    found_weights: List[np.ndarray] = []
    for side, (ordering, arcs) in _POLYGONS[kind].items():
        for j in range(n):
            if j == circle:
                continue
            first, last = (j, circle) if side == "R" else (circle, j)
            bottom = states[:, first].astype(np.int64)
            top = states[:, last].astype(np.int64)
            height = (top - bottom) % n
            width = (last - first) % n
            valid = np.ones(len(states), dtype=bool)
            for step in range(1, width):
                k = (first + step) % n
                offset = (states[:, k] - bottom) % n
                valid &= ~((offset > 0) & (offset < height))
            points = {"B": 4 * bottom, "T": 4 * top}
            positions = {
                name: (value - points["B"]) % period for name, value in heights.items()
            }
            span = 4 * height
            for name in ordering:
                valid &= positions[name] < span
            if len(ordering) == 2:
                valid &= positions[ordering[0]] < positions[ordering[1]]
            points.update(heights)
            weight = np.zeros(len(states), dtype=np.int64)
            for step in range(width):
                k = (first + step) % n
                weight += (o_rows[k] - bottom) % n < height
                weight += (x_rows[k] - bottom) % n < height
            gained, lost = (right_marks, left_marks) if side == "R" else (left_marks, right_marks)
            for start, end in arcs:
                for mark in gained:
                    weight += _in_arc(mark, points[start], points[end], period)
                for mark in lost:
                    weight -= _in_arc(mark, points[start], points[end], period)
            sources = ids[valid]
            place_j, place_c = n ** (n - 1 - j), n ** (n - 1 - circle)
            row_j = states[valid, j].astype(np.int64)
            row_c = states[valid, circle].astype(np.int64)
            swapped = keys[valid] + (row_c - row_j) * place_j + (row_j - row_c) * place_c
            found_sources.append(sources)
            found_targets.append(np.searchsorted(keys, swapped))
            found_weights.append(weight[valid])
    return (
        np.concatenate(found_sources),
        np.concatenate(found_targets),
        np.concatenate(found_weights),
    )


def _polygon_map(
    grid: GridDiagram,
    column: int,
    kind: str,
    source: UComplex,
    target: UComplex,
    declared_shift: int,
    map_type=ChainMap,
    **kwargs,
) -> ChainMap:
    states = enumerate_states(grid.n)
    keys = state_keys(states)
    entries: MapEntries = {}
    sources, targets, weights = _polygons(grid, column, kind, states, keys)
    for s, t, w in zip(sources.tolist(), targets.tolist(), weights.tolist()):
        accumulate(entries, s, t, 1 << w)
    log.debug(f"{kind}: {len(sources)} empty polygons.")
    return map_type(
        source=source,
        target=target,
        entries=entries,
        name=kind,
        declared_shift=declared_shift,
        **kwargs,
    )


def crossing_change_pair(
    grid_plus: GridDiagram,
    column: int,
    configuration: Optional[Configuration] = None,
) -> Tuple[GridDiagram, ChainMap, ChainMap, Homotopy, Homotopy]:
    """Crossing change maps at the columns ``column`` and ``column + 1``.

    Args:
        grid_plus: the positive grid, see ``orient_crossing``
        column: the left one of the two exchanged columns
        configuration: enumeration limits
    Returns:
        the negative grid, ``N``, ``P``, ``H+`` and ``H-``
    Raises:
        InvalidCrossingColumns: if the columns do not interleave or
            ``grid_plus`` is the negative side
    """
    columns = CrossingColumns.of(grid_plus, column)
    if not columns.is_positive():
        raise InvalidCrossingColumns(
            f"Columns {column}, {column + 1} of {grid_plus} are the negative side."
        )
    grid_minus = swap_columns(grid_plus, column)
    plus = build_complex(grid_plus, configuration)
    minus = build_complex(grid_minus, configuration)
    n_map = _polygon_map(grid_plus, column, "N", plus, minus, 0)
    p_map = _polygon_map(grid_plus, column, "P", minus, plus, -2)
    h_plus = _polygon_map(
        grid_plus, column, "H+", plus, plus, 0, map_type=Homotopy, corrects="P∘N"
    )
    h_minus = _polygon_map(
        grid_plus, column, "H-", minus, minus, 0, map_type=Homotopy, corrects="N∘P"
    )
    return grid_minus, n_map, p_map, h_plus, h_minus


def crossing_identity_defects(maps: Sequence, limit: int = 10) -> Dict[str, List]:
    """Defects of every identity satisfied by the crossing change maps."""
    _, n_map, p_map, h_plus, h_minus = maps
    return {
        "N chain map": n_map.chain_map_defects(limit),
        "P chain map": p_map.chain_map_defects(limit),
        "∂H+ + H+∂ = P∘N + U": h_plus.identity_defects(p_map * n_map, limit),
        "∂H- + H-∂ = N∘P + U": h_minus.identity_defects(n_map * p_map, limit),
        "N degree": n_map.shift_defects(limit),
        "P degree": p_map.shift_defects(limit),
    }
