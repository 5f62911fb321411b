"""Expected values of the built-in library and the closed formulas.

Library entries are matched by subject name, with or without the
``builtin:`` prefix; other subjects are ignored. Entries above the index
cap are still compared on the keys read off the planar diagram.
"""

import dataclasses
from typing import Any, Callable, Dict, List, Sequence, Union

from loguru import logger as log

from ..closed_forms import (
    slice_genus_bound_holds,
    torus_genus,
    upsilon_torus,
    upsilon_torus_3q,
)
from ..grid import GridDiagram, PlanarRealization
from ..invariants import (
    gamma4_lower_bound,
    link_module,
    renormalized_upsilon_set,
    upsilon,
    upsilon_set,
)
from ..library import BUILTIN_PREFIX, LIBRARY
from ..signature import determinant_from_grid, signature_from_grid
from ..types import CheckResult, Configuration, PlugIn
from .common import (
    CheckConfiguration,
    Subject,
    guarded,
    index_cap,
    load_configuration,
    outcome,
)

TORUS_UPSILONS = {(2, 3): -1, (3, 4): -2, (3, 5): -3, (3, 7): -4, (5, 9): -10, (5, 11): -12}
"""Published υ of torus knots."""


PLANAR_KEYS = frozenset({"sigma", "determinant"})
"""Expected values that need no grid complex."""


@dataclasses.dataclass
class LibraryConfiguration(CheckConfiguration):
    """Configuration items for the library check.

    Attributes:
        provenance: which expected values are compared
        closed_forms: also compare the closed formulas with published values
        connected_sums: largest ``n`` for the γ4 bound of ``#n T(3,4)``
    """

    provenance: List[str] = dataclasses.field(default_factory=lambda: ["paper", "derived"])
    closed_forms: bool = True
    connected_sums: int = 5


def _measurements(grid: GridDiagram, settings: Configuration) -> Dict[str, Callable[[], Any]]:
    return {
        "upsilon": lambda: upsilon(grid, settings),
        "upsilon_set": lambda: upsilon_set(grid, settings).values2,
        "renormalized": lambda: renormalized_upsilon_set(grid, None, settings).values2,
        "sigma": lambda: signature_from_grid(PlanarRealization(grid)),
        "determinant": lambda: determinant_from_grid(PlanarRealization(grid)),
        "module": lambda: link_module(grid, settings),
    }


def _closed_form_defects(connected_sums: int) -> List[str]:
    defects = []
    for (p, q), expected in TORUS_UPSILONS.items():
        value = upsilon_torus(p, q)
        if value != expected:
            defects.append(f"υ(T({p},{q})) = {value} != {expected}")
        if p == 3 and upsilon_torus_3q(q) != value:
            defects.append(f"T(3,{q}) formula gives {upsilon_torus_3q(q)} != {value}")
        if not slice_genus_bound_holds(value, torus_genus(p, q)):
            defects.append(f"|υ(T({p},{q}))| exceeds the genus {torus_genus(p, q)}")
    for n in range(1, connected_sums + 1):
        bound = gamma4_lower_bound(-2 * n, -6 * n)
        if bound != n:
            defects.append(f"γ4 bound for #{n} T(3,4) is {bound}, not {n}")
    return defects


def library_check(
    subjects: Sequence[Subject],
    settings: Configuration,
    configuration: Union[Dict[str, Any], LibraryConfiguration],
) -> List[CheckResult]:
    """Every tagged expected value of a library entry is reproduced exactly."""
    configuration = load_configuration(LibraryConfiguration, configuration)
    results = []
    if configuration.closed_forms:
        results.append(
            outcome(
                "paper",
                "closed forms",
                _closed_form_defects(configuration.connected_sums),
                f"{len(TORUS_UPSILONS)} torus knots",
                configuration.limit,
            )
        )
    entries = [
        (name, grid)
        for name, grid in subjects
        if name.removeprefix(BUILTIN_PREFIX) in LIBRARY
    ]
    cap = index_cap(settings, configuration)
    for name, grid in entries:
        entry = LIBRARY[name.removeprefix(BUILTIN_PREFIX)]
        keys = [
            key
            for key, expected in entry.expected.items()
            if expected.provenance in configuration.provenance
            and (grid.n <= cap or key in PLANAR_KEYS)
        ]
        if not keys:
            log.debug(f"Skipping {name} above index {cap}.")
            continue

        def body(entry=entry, name=name, grid=grid, keys=keys):
            measure = _measurements(grid, settings)
            defects = []
            compared = []
            for key in keys:
                expected = entry.expected[key]
                value = measure[key]()
                compared.append(f"{key} [{expected.provenance}]")
                if value != expected.value:
                    defects.append(f"{key}: {value} != {expected.value} [{expected.provenance}]")
            return outcome("paper", name, defects, ", ".join(compared), configuration.limit)

        results.append(guarded("paper", name, body))
    return results


paper = PlugIn(
    callable=library_check,
    default_configuration={"provenance": ["paper", "derived"]},
    metadata={"summary": "built-in grids reproduce their tagged expected values"},
)
