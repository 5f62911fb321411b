"""The unoriented grid complex.

Generators are the ``n!`` grid states, identified by their lexicographic rank.
The differential counts empty rectangles on the torus and records the number
of markings a rectangle covers as the power of ``U``.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, TextIO, Tuple, Union

import numpy as np
from loguru import logger as log

from .grid import GridDiagram, GridState, maslov_array, trace_components
from .types import Configuration, NotAComplex, SizeLimitExceeded

Differential = Dict[int, Dict[int, int]]
"""Sparse differential: source id -> {target id: power of U}."""


def enumerate_states(n: int) -> np.ndarray:
    """All permutations of ``range(n)`` in lexicographic order, one per row."""
    states = np.zeros((1, 0), dtype=np.int8)
    for size in range(1, n + 1):
        blocks = []
        for first in range(size):
            rest = states + (states >= first)
            head = np.full((rest.shape[0], 1), first, dtype=np.int8)
            blocks.append(np.hstack([head, rest.astype(np.int8)]))
        states = np.vstack(blocks)
    return states


def state_keys(states: np.ndarray) -> np.ndarray:
    """Base-``n`` keys of states; increasing along lexicographic order."""
    n = states.shape[1]
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return states.astype(np.int64) @ weights


def state_id(state: GridState) -> int:
    """Lexicographic rank of a state (its Lehmer code read in factorial base)."""
    rows = state.rows
    n = len(rows)
    return sum(
        sum(1 for later in rows[i + 1 :] if later < rows[i]) * math.factorial(n - 1 - i)
        for i in range(n)
    )


@dataclass
class Rectangle:
    """An empty rectangle of a grid state.

    Attributes:
        source: the state the rectangle starts from
        target: the state obtained by moving the two corners
        left: vertical circle through the lower-left corner
        bottom: horizontal circle through the lower-left corner
        width: number of columns covered
        height: number of rows covered
        weight: number of markings covered
    """

    source: GridState
    target: GridState
    left: int
    bottom: int
    width: int
    height: int
    weight: int


@dataclass
class UComplex:
    """A free δ-graded complex over ``F[U]`` with monomial differential.

    Attributes:
        delta2: doubled δ-grading of every generator
        alexander2: doubled Alexander grading of every generator
        differential: sparse differential keyed by source id
        grid: the grid the complex was built from, if any
    """

    delta2: np.ndarray
    alexander2: np.ndarray
    differential: Differential = field(default_factory=dict)
    grid: Optional[GridDiagram] = None

    @property
    def size(self) -> int:
        """Number of generators."""
        return len(self.delta2)

    def entries(self) -> Iterator[Tuple[int, int, int]]:
        """Iterate ``(source, target, power)`` in source order."""
        for source in sorted(self.differential):
            for target, power in sorted(self.differential[source].items()):
                yield source, target, power

    @property
    def entry_count(self) -> int:
        """Number of nonzero differential entries."""
        return sum(len(row) for row in self.differential.values())

    def transpose(self) -> Differential:
        """The differential keyed by target id."""
        result: Differential = {}
        for source, row in self.differential.items():
            for target, power in row.items():
                result.setdefault(target, {})[source] = power
        return result

    @classmethod
    def from_entries(
        cls,
        delta2: Sequence[int],
        entries: Sequence[Tuple[int, int, int]],
        alexander2: Optional[Sequence[int]] = None,
    ) -> "UComplex":
        """Assemble a complex from gradings and ``(source, target, power)`` triples.

        Entries hitting the same pair twice cancel over the two-element field.
        """
        differential: Differential = {}
        for source, target, power in entries:
            row = differential.setdefault(source, {})
            if target in row:
                if row[target] != power:
                    raise NotAComplex(
                        f"Entry {source}->{target} carries powers {row[target]} and {power}."
                    )
                del row[target]
            else:
                row[target] = power
        differential = {source: row for source, row in differential.items() if row}
        alexander2 = alexander2 if alexander2 is not None else [0] * len(delta2)
        return cls(
            delta2=np.asarray(delta2, dtype=np.int64),
            alexander2=np.asarray(alexander2, dtype=np.int64),
            differential=differential,
        )

    def relabeled(self, order: Sequence[int]) -> "UComplex":
        """The same complex with generator ``order[k]`` renamed to ``k``."""
        position = {old: new for new, old in enumerate(order)}
        return UComplex.from_entries(
            delta2=[int(self.delta2[old]) for old in order],
            alexander2=[int(self.alexander2[old]) for old in order],
            entries=[(position[s], position[t], p) for s, t, p in self.entries()],
        )


def empty_rectangles(grid: GridDiagram, state: GridState) -> List[Rectangle]:
    """All empty rectangles starting at ``state``, with their weights.

    For every pair of vertical circles there are two rectangles with
    lower-left and upper-right corners on ``state``: one spanning the columns
    between the circles and one wrapping around the torus.
    """
    n = grid.n
    rows = state.rows
    markings = list(zip(grid.o_rows, grid.x_rows))
    result = []
    for i in range(n):
        for j in range(i + 1, n):
            for left, right in ((i, j), (j, i)):
                width = (right - left) % n
                bottom = rows[left]
                height = (rows[right] - bottom) % n
                interior = [(left + k) % n for k in range(1, width)]
                if any(0 < (rows[k] - bottom) % n < height for k in interior):
                    continue
                weight = sum(
                    int((mark - bottom) % n < height)
                    for k in range(width)
                    for mark in markings[(left + k) % n]
                )
                result.append(
                    Rectangle(
                        source=state,
                        target=state.swapped(i, j),
                        left=left,
                        bottom=bottom,
                        width=width,
                        height=height,
                        weight=weight,
                    )
                )
    return result


def _covered(marks: np.ndarray, columns: Sequence[int], bottom, height) -> np.ndarray:
    """Markings of ``columns`` inside the cyclic row band ``[bottom, bottom + height)``."""
    n = len(marks)
    count = np.zeros(len(bottom), dtype=np.int64)
    for column in columns:
        count += (marks[column] - bottom) % n < height
    return count


def _rectangles_for_pair(
    states: np.ndarray,
    keys: np.ndarray,
    o_rows: np.ndarray,
    x_rows: np.ndarray,
    pair: Tuple[int, int],
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    i, j = pair
    n = states.shape[1]
    a = states[:, i].astype(np.int64)
    b = states[:, j].astype(np.int64)
    found = []
    for left_row, right_row, columns in (
        (a, b, list(range(i, j))),
        (b, a, list(range(j, n)) + list(range(0, i))),
    ):
        height = (right_row - left_row) % n
        empty = np.ones(len(a), dtype=bool)
        for k in columns[1:]:
            empty &= ~(((states[:, k] - left_row) % n > 0) & ((states[:, k] - left_row) % n < height))
        weight = _covered(o_rows, columns, left_row, height) + _covered(
            x_rows, columns, left_row, height
        )
        found.append((empty, weight))
    (inner, inner_weight), (outer, outer_weight) = found
    keep = inner ^ outer
    sources = np.flatnonzero(keep)
    weights = np.where(inner, inner_weight, outer_weight)[keep]
    place_i, place_j = n ** (n - 1 - i), n ** (n - 1 - j)
    swapped = keys[keep] + (b - a)[keep] * place_i + (a - b)[keep] * place_j
    targets = np.searchsorted(keys, swapped)
    return sources, targets, weights


def build_complex(
    grid: GridDiagram, configuration: Optional[Configuration] = None
) -> UComplex:
    """Build UGC of ``grid``.

    Args:
        grid: the grid diagram
        configuration: enumeration limits and worker count
    Raises:
        SizeLimitExceeded: if the index is beyond the configured budget
    """
    configuration = configuration or Configuration()
    n = grid.n
    if not configuration.index_allowed(n):
        raise SizeLimitExceeded(
            f"Index {n} exceeds max_index={configuration.max_index}"
            f"{'' if configuration.huge else ' (use --huge for index 11)'}."
        )
    log.debug(f"Enumerating {math.factorial(n)} states of {grid}.")
    states = enumerate_states(n)
    keys = state_keys(states)
    o_rows, x_rows = grid.o_array, grid.x_array
    excess = n - trace_components(grid).component_count
    maslov_o = maslov_array(states, o_rows)
    maslov_x = maslov_array(states, x_rows)

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    task = partial(_rectangles_for_pair, states, keys, o_rows, x_rows)
    with ThreadPoolExecutor(max_workers=configuration.threads) as pool:
        blocks = list(pool.map(task, pairs))

    differential: Differential = {}
    for sources, targets, weights in blocks:
        for source, target, weight in zip(
            sources.tolist(), targets.tolist(), weights.tolist()
        ):
            differential.setdefault(source, {})[target] = weight
    complex_ = UComplex(
        delta2=maslov_o + maslov_x + excess,
        alexander2=maslov_o - maslov_x - excess,
        differential=differential,
        grid=grid,
    )
    log.debug(f"Built complex with {complex_.size} generators and {complex_.entry_count} entries.")
    return complex_


def d_squared_defects(complex_: UComplex, limit: int = 10) -> List[Tuple[int, int, int]]:
    """Entries of ``∂∘∂`` as ``(source, target, polynomial bitmask)``, at most ``limit``."""
    defects = []
    for source in sorted(complex_.differential):
        accumulated: Dict[int, int] = {}
        for middle, first in complex_.differential[source].items():
            for target, second in complex_.differential.get(middle, {}).items():
                accumulated[target] = accumulated.get(target, 0) ^ (1 << (first + second))
        for target, polynomial in sorted(accumulated.items()):
            if polynomial:
                defects.append((source, target, polynomial))
                if len(defects) >= limit:
                    return defects
    return defects


def d_squared_is_zero(complex_: UComplex) -> bool:
    """Whether the differential squares to zero over ``F[U]``."""
    return not d_squared_defects(complex_, limit=1)


def homogeneity_defects(complex_: UComplex, limit: int = 10) -> List[Tuple[int, int, int]]:
    """Entries whose power differs from ``(2δ(target) - 2δ(source) + 2) / 2``."""
    defects = []
    for source, target, power in complex_.entries():
        if 2 * power != complex_.delta2[target] - complex_.delta2[source] + 2:
            defects.append((source, target, power))
            if len(defects) >= limit:
                break
    return defects


def write_complex(complex_: UComplex, stream: TextIO) -> None:
    """Write ``complex_`` in the ``UGC v1`` text format."""
    stream.write("UGC v1\n")
    for generator in range(complex_.size):
        alexander = Fraction(int(complex_.alexander2[generator]), 2)
        stream.write(f"g {generator} {int(complex_.delta2[generator])} {alexander}\n")
    for source, target, power in complex_.entries():
        stream.write(f"e {source} {target} {power}\n")


def read_complex(stream: TextIO) -> UComplex:
    """Read a complex written by ``write_complex``."""
    header = stream.readline().strip()
    if header != "UGC v1":
        raise NotAComplex(f"Unknown complex header {header!r}.")
    generators: Dict[int, Tuple[int, int]] = {}
    entries = []
    for line in stream:
        fields_ = line.split()
        if not fields_ or fields_[0].startswith("#"):
            continue
        if fields_[0] == "g":
            generators[int(fields_[1])] = (int(fields_[2]), int(Fraction(fields_[3]) * 2))
        elif fields_[0] == "e":
            entries.append(tuple(int(_) for _ in fields_[1:4]))
        else:
            raise NotAComplex(f"Unknown record {line.strip()!r}.")
    if sorted(generators) != list(range(len(generators))):
        raise NotAComplex("Generator ids are not consecutive.")
    ordered = [generators[_] for _ in range(len(generators))]
    return UComplex.from_entries(
        delta2=[delta2 for delta2, _ in ordered],
        alexander2=[alexander2 for _, alexander2 in ordered],
        entries=entries,
    )


def dump_complex(complex_: UComplex, path: Union[str, Path]) -> None:
    """Write ``complex_`` to ``path``."""
    with Path(path).open("w", encoding="utf8") as file:
        write_complex(complex_, file)


def load_complex(path: Union[str, Path]) -> UComplex:
    """Read a complex from ``path``."""
    with Path(path).open("r", encoding="utf8") as file:
        return read_complex(file)
