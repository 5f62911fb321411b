"""Checks on the grid complex itself: ∂² = 0, homogeneity and the mod ``U^k`` oracle."""

import dataclasses
from typing import Any, Dict, List, Sequence, Union

from ..complex import build_complex, d_squared_defects, homogeneity_defects
from ..homology import homology, homology_mod_uk_oracle
from ..types import CheckResult, Configuration, PlugIn
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
class OracleConfiguration(CheckConfiguration):
    """Configuration items for the oracle comparison.

    Attributes:
        max_power: compare modulo ``U^k`` for ``k = 1..max_power``
    """

    max_index: int = 5
    max_power: int = 4


def d_squared_check(
    subjects: Sequence[Subject],
    settings: Configuration,
    configuration: Union[Dict[str, Any], CheckConfiguration],
) -> List[CheckResult]:
    """``∂∘∂ = 0`` entrywise."""
    configuration = load_configuration(CheckConfiguration, configuration)
    results = []
    for name, grid in feasible(subjects, index_cap(settings, configuration)):

        def body(grid=grid, name=name):
            complex_ = build_complex(grid, settings)
            return outcome(
                "d_squared",
                name,
                d_squared_defects(complex_, configuration.limit),
                f"{complex_.size} generators, {complex_.entry_count} entries",
                configuration.limit,
            )

        results.append(guarded("d_squared", name, body))
    return results


def homogeneity_check(
    subjects: Sequence[Subject],
    settings: Configuration,
    configuration: Union[Dict[str, Any], CheckConfiguration],
) -> List[CheckResult]:
    """Every differential entry lowers 2δ by 2 once its ``U``-power is accounted for."""
    configuration = load_configuration(CheckConfiguration, configuration)
    results = []
    for name, grid in feasible(subjects, index_cap(settings, configuration)):

        def body(grid=grid, name=name):
            complex_ = build_complex(grid, settings)
            return outcome(
                "homogeneity",
                name,
                homogeneity_defects(complex_, configuration.limit),
                f"{complex_.entry_count} entries",
                configuration.limit,
            )

        results.append(guarded("homogeneity", name, body))
    return results


def oracle_check(
    subjects: Sequence[Subject],
    settings: Configuration,
    configuration: Union[Dict[str, Any], OracleConfiguration],
) -> List[CheckResult]:
    """The reduction agrees with dense linear algebra modulo ``U^k``."""
    configuration = load_configuration(OracleConfiguration, configuration)
    results = []
    for name, grid in feasible(subjects, index_cap(settings, configuration)):

        def body(grid=grid, name=name):
            complex_ = build_complex(grid, settings)
            module = homology(complex_, check=settings.check_complex)
            defects = []
            for power in range(1, configuration.max_power + 1):
                expected = module.mod_u_dimensions(power)
                measured = homology_mod_uk_oracle(complex_, power)
                if expected != measured:
                    defects.append(f"U^{power}: {expected} != {measured}")
            return outcome(
                "oracle",
                name,
                defects,
                f"{module} compared up to U^{configuration.max_power}",
                configuration.limit,
            )

        results.append(guarded("oracle", name, body))
    return results


d_squared = PlugIn(
    callable=d_squared_check,
    default_configuration={},
    metadata={"summary": "the differential squares to zero"},
)

homogeneity = PlugIn(
    callable=homogeneity_check,
    default_configuration={},
    metadata={"summary": "the differential is homogeneous of degree -1"},
)

oracle = PlugIn(
    callable=oracle_check,
    default_configuration={"max_index": 5, "max_power": 4},
    metadata={"summary": "reduction agrees with mod U^k linear algebra"},
)
