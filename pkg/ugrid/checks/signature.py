"""Consistency of signatures computed from grid projections."""

from typing import Any, Dict, List, Sequence, Union

from ..grid import PlanarRealization, mirror, trace_components
from ..signature import signature_from_grid
from ..types import CheckResult, Configuration, PlugIn
from .common import CheckConfiguration, Subject, guarded, load_configuration, outcome


def signature_check(
    subjects: Sequence[Subject],
    settings: Configuration,  # pylint: disable=W0613
    configuration: Union[Dict[str, Any], CheckConfiguration],
) -> List[CheckResult]:
    """σ does not depend on the shading or the fundamental domain and flips under mirroring."""
    configuration = load_configuration(CheckConfiguration, configuration)
    results = []
    for name, grid in subjects:

        def body(grid=grid, name=name):
            sigma = signature_from_grid(PlanarRealization(grid))
            defects = []
            other_shading = signature_from_grid(PlanarRealization(grid), shaded_parity=0)
            if other_shading != sigma:
                defects.append(f"shading 0 gives {other_shading}")
            for k in range(1, min(grid.n, 3)):
                shifted = signature_from_grid(PlanarRealization(grid, (k, k)))
                if shifted != sigma:
                    defects.append(f"domain ({k}, {k}) gives {shifted}")
            mirrored = signature_from_grid(PlanarRealization(mirror(grid)))
            if mirrored != -sigma:
                defects.append(f"mirror gives {mirrored}")
            if trace_components(grid).component_count == 1 and sigma % 2:
                defects.append(f"odd knot signature {sigma}")
            return outcome("signature", name, defects, f"σ = {sigma}", configuration.limit)

        results.append(guarded("signature", name, body))
    return results


signature = PlugIn(
    callable=signature_check,
    default_configuration={},
    metadata={"summary": "signatures agree across shadings, domains and mirrors"},
)
