"""Checks of the chain maps induced by crossing changes and band moves."""

import dataclasses
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Union

from loguru import logger as log

from ..cobordism import (
    ChainMap,
    induced_isomorphism_at_u1,
    oriented_saddle,
    swap_o_markings,
    u_times_identity,
    unorientable_band,
    unorientable_saddle,
)
from ..crossing import (
    CrossingColumns,
    crossing_change_pair,
    crossing_identity_defects,
    orient_crossing,
)
from ..grid import GridDiagram, trace_components
from ..invariants import upsilon, upsilon_set
from ..types import CheckResult, Configuration, InputError, PlugIn
from .common import (
    CheckConfiguration,
    Subject,
    feasible,
    guarded,
    index_cap,
    load_configuration,
    outcome,
)


@dataclasses.dataclass
class MapConfiguration(CheckConfiguration):
    """Configuration items for the cobordism checks.

    Attributes:
        max_index: defaults to 6, maps are checked entrywise on both complexes
        columns: number of admissible column pairs tried per grid, all if None
    """

    max_index: Optional[int] = 6
    columns: Optional[int] = 1


def composite_defects(first: ChainMap, second: ChainMap, limit: int) -> List:
    """Entries of ``second ∘ first + U·id``."""
    total = second * first + u_times_identity(first.source)
    return list(total.items())[:limit]


def pair_defects(first: ChainMap, second: ChainMap, limit: int) -> List[str]:
    """Chain map, degree and composite defects of two maps inverse up to ``U``."""
    defects = []
    for chain_map in (first, second):
        for entry in chain_map.chain_map_defects(limit):
            defects.append(f"{chain_map.name} chain map: {entry}")
        for entry in chain_map.shift_defects(limit):
            defects.append(f"{chain_map.name} degree: {entry}")
    for one, other in ((first, second), (second, first)):
        for entry in composite_defects(one, other, limit):
            defects.append(f"{other.name}∘{one.name} + U: {entry}")
    return defects


def _admissible(grid: GridDiagram, configuration: MapConfiguration, accept) -> List[int]:
    columns = []
    for column in range(grid.n - 1):
        if configuration.columns is not None and len(columns) >= configuration.columns:
            break
        if accept(grid, column):
            columns.append(column)
    return columns


def _interleaves(grid: GridDiagram, column: int) -> bool:
    try:
        CrossingColumns.of(grid, column)
    except InputError:
        return False
    return True


def crossing_change_check(
    subjects: Sequence[Subject],
    settings: Configuration,
    configuration: Union[Dict[str, Any], MapConfiguration],
) -> List[CheckResult]:
    """Chain map and homotopy identities of ``N``, ``P``, ``H+`` and ``H-``.

    For knots also ``0 <= υ(K-) - υ(K+) <= 1``.
    """
    configuration = load_configuration(MapConfiguration, configuration)
    limit = configuration.limit
    results = []
    for name, grid in feasible(subjects, index_cap(settings, configuration)):
        for column in _admissible(grid, configuration, _interleaves):
            subject = f"{name} columns {column},{column + 1}"

            def body(grid=grid, column=column, subject=subject):
                plus, _ = orient_crossing(grid, column)
                maps = crossing_change_pair(plus, column, settings)
                minus, n_map, p_map = maps[0], maps[1], maps[2]
                defects = [
                    f"{identity}: {entries}"
                    for identity, entries in crossing_identity_defects(maps, limit).items()
                    if entries
                ]
                for label, chain_map in (("N", n_map), ("P", p_map)):
                    if not induced_isomorphism_at_u1(chain_map):
                        defects.append(f"{label} is not an isomorphism at U = 1")
                detail = "N, P chain maps; H± homotopies"
                if trace_components(plus).component_count == 1:
                    difference = upsilon(minus, settings) - upsilon(plus, settings)
                    detail += f"; υ(K-) - υ(K+) = {difference}"
                    if not 0 <= difference <= 1:
                        defects.append(f"υ(K-) - υ(K+) = {difference}")
                return outcome("crossing_change", subject, defects, detail, limit)

            results.append(guarded("crossing_change", subject, body))
    return results


def _saddle_admissible(grid: GridDiagram, column: int) -> bool:
    try:
        swapped = swap_o_markings(grid, column)
    except InputError:
        return False
    ell = trace_components(grid).component_count
    return abs(trace_components(swapped).component_count - ell) == 1


def oriented_saddle_check(
    subjects: Sequence[Subject],
    settings: Configuration,
    configuration: Union[Dict[str, Any], MapConfiguration],
) -> List[CheckResult]:
    """Split and merge are chain maps of the stated degrees with composites ``U``.

    The υ-sets satisfy ``υ(L) - 1 <= υ(L') <= υ(L)`` for the maximum and the
    minimum, ``L'`` being the side with more components.
    """
    configuration = load_configuration(MapConfiguration, configuration)
    limit = configuration.limit
    results = []
    for name, grid in feasible(subjects, index_cap(settings, configuration)):
        for column in _admissible(grid, configuration, _saddle_admissible):
            subject = f"{name} columns {column},{column + 1}"

            def body(grid=grid, column=column, subject=subject):
                other, split, merge = oriented_saddle(grid, column, settings)
                defects = pair_defects(split, merge, limit)
                fewer, more = (
                    (grid, other)
                    if trace_components(other).component_count
                    > trace_components(grid).component_count
                    else (other, grid)
                )
                small = upsilon_set(fewer, settings).values2
                large = upsilon_set(more, settings).values2
                for label, before, after in (
                    ("max", small[-1], large[-1]),
                    ("min", small[0], large[0]),
                ):
                    if not before - 2 <= after <= before:
                        defects.append(f"2υ_{label}: {before} -> {after}")
                return outcome(
                    "oriented_saddle",
                    subject,
                    defects,
                    f"2υ-sets {small} -> {large}",
                    limit,
                )

            results.append(guarded("oriented_saddle", subject, body))
    return results


def _unorientable_admissible(grid: GridDiagram, column: int) -> bool:
    try:
        unorientable_band(grid, column)
    except InputError as error:
        log.debug(f"No unorientable band at column {column}: {error}")
        return False
    return True


def unorientable_saddle_check(
    subjects: Sequence[Subject],
    settings: Configuration,
    configuration: Union[Dict[str, Any], MapConfiguration],
) -> List[CheckResult]:
    """``ν' ∘ ν = ν ∘ ν' = U`` with shifts ``(e - 2) / 2`` and ``-(2 + e) / 2`` on 2δ.

    For knots also ``|υ(K) - υ(K') + e/4| <= 1/2``.
    """
    configuration = load_configuration(MapConfiguration, configuration)
    limit = configuration.limit
    results = []
    knots = [
        (name, grid)
        for name, grid in subjects
        if trace_components(grid).component_count == 1
    ]
    for name, grid in feasible(knots, index_cap(settings, configuration)):
        for column in _admissible(grid, configuration, _unorientable_admissible):
            subject = f"{name} columns {column},{column + 1}"

            def body(grid=grid, column=column, subject=subject):
                resolved, nu, nu_prime, e = unorientable_saddle(grid, column, settings)
                defects = pair_defects(nu, nu_prime, limit)
                detail = f"e = {e}"
                if trace_components(resolved).component_count == 1:
                    gap = (
                        upsilon(grid, settings)
                        - upsilon(resolved, settings)
                        + Fraction(e, 4)
                    )
                    detail += f"; υ(K) - υ(K') + e/4 = {gap}"
                    if abs(gap) > Fraction(1, 2):
                        defects.append(f"|υ(K) - υ(K') + e/4| = {abs(gap)}")
                return outcome("unorientable_saddle", subject, defects, detail, limit)

            results.append(guarded("unorientable_saddle", subject, body))
    return results


crossing_change = PlugIn(
    callable=crossing_change_check,
    default_configuration={"columns": 1},
    metadata={"summary": "pentagon maps and hexagon homotopies of a crossing change"},
)

oriented_saddle_moves = PlugIn(
    callable=oriented_saddle_check,
    default_configuration={"columns": 1},
    metadata={"summary": "split and merge maps of oriented band moves"},
)

unorientable_saddle_moves = PlugIn(
    callable=unorientable_saddle_check,
    default_configuration={"columns": 1},
    metadata={"summary": "maps of unorientable band moves and their degrees"},
)
