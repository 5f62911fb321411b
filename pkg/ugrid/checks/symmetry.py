"""Checks of how grid homology behaves under moves of the grid.

Mirroring, stabilization and adding split unknots all have a predicted
effect on the ``V``-divided module; ``wrbraid`` compares a grid pairing with
writhe and bridge index of a planar realization.
"""

import dataclasses
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

from ..grid import (
    PlanarRealization,
    add_unknots,
    bridge_index,
    local_minima,
    mirror,
    stabilize,
    trace_components,
    wrbraid_defect,
)
from ..invariants import link_module, mirror_upsilon_set, upsilon_set
from ..types import CheckResult, Configuration, PlugIn
from .common import (
    CheckConfiguration,
    Subject,
    feasible,
    guarded,
    index_cap,
    load_configuration,
    outcome,
    random_subjects,
)


@dataclasses.dataclass
class WrbraidConfiguration(CheckConfiguration):
    """Configuration items for the writhe and bridge index identity.

    Attributes:
        random: number of additional random planar grids
        min_index: smallest index of the random grids
        random_max_index: largest index of the random grids
        shifts: fundamental domains tried per subject, all of them if None
    """

    random: int = 100
    min_index: int = 3
    random_max_index: int = 7
    shifts: Optional[int] = None


@dataclasses.dataclass
class StabilizationConfiguration(CheckConfiguration):
    """Configuration items for stabilization invariance.

    Attributes:
        columns: columns whose X is stabilized, negative values count from the right
    """

    columns: List[int] = dataclasses.field(default_factory=lambda: [0, -1])


@dataclasses.dataclass
class DisjointUnionConfiguration(CheckConfiguration):
    """Configuration items for split unions with unknots.

    Attributes:
        copies: number of unknots added
    """

    copies: int = 1


def realization_defects(realization: PlanarRealization) -> List[str]:
    """Failures of ``J(O - X, O - X) = b - Wr`` and of ``#maxima = #minima``."""
    defects = []
    defect = wrbraid_defect(realization)
    if defect != 0:
        defects.append(f"J - (b - Wr) = {defect}")
    maxima, minima = bridge_index(realization), local_minima(realization)
    if maxima != minima:
        defects.append(f"{maxima} maxima, {minima} minima")
    return defects


def wrbraid_check(
    subjects: Sequence[Subject],
    settings: Configuration,
    configuration: Union[Dict[str, Any], WrbraidConfiguration],
) -> List[CheckResult]:
    """``J(O - X, O - X) = b - Wr`` and as many minima as maxima for planar realizations."""
    configuration = load_configuration(WrbraidConfiguration, configuration)
    results = []
    for name, grid in subjects:
        n = grid.n
        shifts = [(a, b) for a in range(n) for b in range(n)]
        if configuration.shifts is not None:
            shifts = shifts[: configuration.shifts]
        defects = []
        for shift in shifts:
            found = realization_defects(PlanarRealization(grid, shift))
            if found:
                defects.append(f"{shift}: {'; '.join(found)}")
        results.append(
            outcome(
                "wrbraid",
                name,
                defects,
                f"{len(shifts)} fundamental domains",
                configuration.limit,
            )
        )
    if configuration.random:
        rng = np.random.default_rng(settings.seed)
        grids = random_subjects(
            configuration.random,
            configuration.min_index,
            configuration.random_max_index,
            settings.seed,
        )
        defects = []
        for name, grid in grids:
            shift = (int(rng.integers(grid.n)), int(rng.integers(grid.n)))
            found = realization_defects(PlanarRealization(grid, shift))
            if found:
                defects.append(f"{name} {grid} at {shift}: {'; '.join(found)}")
        results.append(
            outcome(
                "wrbraid",
                f"{configuration.random} random planar grids",
                defects,
                f"indices {configuration.min_index}..{configuration.random_max_index}",
                configuration.limit,
            )
        )
    return results


def mirror_check(
    subjects: Sequence[Subject],
    settings: Configuration,
    configuration: Union[Dict[str, Any], CheckConfiguration],
) -> List[CheckResult]:
    """The mirror has the dual module and the reflected υ-set."""
    configuration = load_configuration(CheckConfiguration, configuration)
    results = []
    for name, grid in feasible(subjects, index_cap(settings, configuration)):

        def body(grid=grid, name=name):
            ell = trace_components(grid).component_count
            mirrored = mirror(grid)
            defects = []
            module = link_module(grid, settings)
            module_mirrored = link_module(mirrored, settings)
            if module_mirrored != module.dual(ell):
                defects.append(f"module {module_mirrored} != dual {module.dual(ell)}")
            values = upsilon_set(grid, settings)
            values_mirrored = upsilon_set(mirrored, settings)
            expected = mirror_upsilon_set(values, ell)
            if values_mirrored != expected:
                defects.append(
                    f"υ-set {values_mirrored.values2} != {expected.values2} (doubled)"
                )
            return outcome(
                "mirror",
                name,
                defects,
                f"{ell} components, 2υ-set {values.values2}",
                configuration.limit,
            )

        results.append(guarded("mirror", name, body))
    return results


def stabilization_check(
    subjects: Sequence[Subject],
    settings: Configuration,
    configuration: Union[Dict[str, Any], StabilizationConfiguration],
) -> List[CheckResult]:
    """Stabilizing leaves the ``V``-divided module unchanged."""
    configuration = load_configuration(StabilizationConfiguration, configuration)
    results = []
    for name, grid in feasible(subjects, index_cap(settings, configuration), margin=1):

        def body(grid=grid, name=name):
            module = link_module(grid, settings)
            columns = sorted({column % grid.n for column in configuration.columns})
            defects = []
            for column in columns:
                stabilized = link_module(stabilize(grid, column), settings)
                if stabilized != module:
                    defects.append(f"column {column}: {stabilized} != {module}")
            return outcome(
                "stabilization",
                name,
                defects,
                f"{module} at columns {columns}",
                configuration.limit,
            )

        results.append(guarded("stabilization", name, body))
    return results


def disjoint_union_check(
    subjects: Sequence[Subject],
    settings: Configuration,
    configuration: Union[Dict[str, Any], DisjointUnionConfiguration],
) -> List[CheckResult]:
    """Adding ``m`` unknots tensors with ``W^m`` and lowers ``υ_min`` by ``m``."""
    configuration = load_configuration(DisjointUnionConfiguration, configuration)
    copies = configuration.copies
    results = []
    knots = [
        (name, grid)
        for name, grid in subjects
        if trace_components(grid).component_count == 1
    ]
    for name, grid in feasible(knots, index_cap(settings, configuration), margin=2 * copies):

        def body(grid=grid, name=name):
            module = link_module(grid, settings)
            union = add_unknots(grid, copies)
            defects = []
            union_module = link_module(union, settings)
            if union_module != module.tensor_w(copies):
                defects.append(f"{union_module} != {module.tensor_w(copies)}")
            upsilon2 = module.free[0]
            values = upsilon_set(union, settings)
            if values.values2[-1] != upsilon2 or values.values2[0] != upsilon2 - 2 * copies:
                defects.append(f"2υ-set {values.values2} for 2υ = {upsilon2}")
            return outcome(
                "disjoint_union",
                name,
                defects,
                f"{copies} unknots added",
                configuration.limit,
            )

        results.append(guarded("disjoint_union", name, body))
    return results


wrbraid = PlugIn(
    callable=wrbraid_check,
    default_configuration={"random": 100, "min_index": 3, "random_max_index": 7},
    metadata={"summary": "J(O-X, O-X) equals bridge index minus writhe"},
)

mirror_law = PlugIn(
    callable=mirror_check,
    default_configuration={},
    metadata={"summary": "mirror images have dual modules and reflected υ-sets"},
)

stabilization = PlugIn(
    callable=stabilization_check,
    default_configuration={"columns": [0, -1]},
    metadata={"summary": "stabilization leaves the V-divided module unchanged"},
)

disjoint_union = PlugIn(
    callable=disjoint_union_check,
    default_configuration={"copies": 1},
    metadata={"summary": "split unknots tensor the module with W"},
)
