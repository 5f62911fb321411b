"""Machine readable reports and their tabular views.

Reports are pydantic dataclasses; JSON is produced and parsed through a
``TypeAdapter`` so that ``from_json(to_json(report)) == report``. Gradings in
modules and υ-sets are doubled, as everywhere in ugrid.
"""

from dataclasses import asdict, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd
from pydantic import TypeAdapter
from pydantic.dataclasses import dataclass

from .grid import GridDiagram
from .homology import GradedModule
from .types import CheckResult

# pylint: disable=R0902


def _halve(value: int) -> str:
    return str(Fraction(value, 2))


@dataclass
class Report:
    """Outcome of ``hom`` and ``verify``.

    Attributes:
        subject: input descriptor, a built-in name or a file path
        grid: the permutations, keys ``o`` and ``x``
        components: number of link components
        module: the ``V``-divided homology, see ``GradedModule.to_dict``
        upsilon: υ, for knots
        upsilon_set: doubled υ-set
        sigma: the signature used, if any
        sigma_source: ``computed``, ``external`` or ``none``
        renormalized: doubled renormalized υ-set
        gamma4_bound: lower bound for the crosscap number, for knots
        timings: wall clock seconds per stage
        checks: verification outcomes
        notes: audit notes, e.g. on externally supplied signatures
    """

    subject: str
    grid: Dict[str, List[int]] = field(default_factory=dict)
    components: Optional[int] = None
    module: Optional[Dict[str, List[Any]]] = None
    upsilon: Optional[int] = None
    upsilon_set: Optional[List[int]] = None
    sigma: Optional[int] = None
    sigma_source: str = "none"
    renormalized: Optional[List[int]] = None
    gamma4_bound: Optional[int] = None
    timings: Dict[str, float] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(check.passed for check in self.checks)

    def to_json(self) -> str:
        """Serialize to JSON."""
        return _REPORT_ADAPTER_.dump_json(self, indent=2).decode("utf8")

    @classmethod
    def from_json(cls, text: Union[str, bytes]) -> "Report":
        """Parse a report written by ``to_json``."""
        return _REPORT_ADAPTER_.validate_json(text)


@dataclass
class TorusReport:
    """Closed form data of a torus knot ``T(p, q)``."""

    p: int
    q: int
    exponents: List[int]
    m_sequence: List[int]
    upsilon: int
    genus: int
    upsilon_3q: Optional[int] = None
    sigma: Optional[int] = None
    gamma4_bound: Optional[int] = None

    def to_json(self) -> str:
        """Serialize to JSON."""
        return TypeAdapter(TorusReport).dump_json(self, indent=2).decode("utf8")


@dataclass
class BandReport:
    """Outcome of a band move at two adjacent columns."""

    subject: str
    column: int
    orientable: bool
    target: Dict[str, List[int]]
    euler_number: int = 0
    epsilon: int = 0
    shifts: Dict[str, List[int]] = field(default_factory=dict)
    upsilon: Dict[str, Optional[int]] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(check.passed for check in self.checks)

    def to_json(self) -> str:
        """Serialize to JSON."""
        return TypeAdapter(BandReport).dump_json(self, indent=2).decode("utf8")


_REPORT_ADAPTER_ = TypeAdapter(Report)


def grid_payload(grid: GridDiagram) -> Dict[str, List[int]]:
    """The permutations of ``grid`` as stored in reports."""
    return {"o": list(grid.o_rows), "x": list(grid.x_rows)}


def module_table(module: GradedModule) -> pd.DataFrame:
    """One row per summand type with its δ-grading and multiplicity."""
    rows = [
        {"summand": "F[U]", "delta": _halve(g), "multiplicity": module.free.count(g)}
        for g in sorted(set(module.free), reverse=True)
    ]
    rows += [
        {
            "summand": "F[U]/(U)" if k == 1 else f"F[U]/(U^{k})",
            "delta": _halve(g),
            "multiplicity": module.torsion.count((g, k)),
        }
        for g, k in sorted(set(module.torsion), reverse=True)
    ]
    return pd.DataFrame(rows, columns=["summand", "delta", "multiplicity"])


def summary_table(report: Report) -> pd.DataFrame:
    """Scalar invariants of a report as ``field``/``value`` pairs."""
    values = {
        "subject": report.subject,
        "components": report.components,
        "module": str(GradedModule.from_dict(report.module)) if report.module else None,
        "upsilon": report.upsilon,
        "upsilon set": (
            ", ".join(_halve(_) for _ in report.upsilon_set)
            if report.upsilon_set is not None
            else None
        ),
        "sigma": report.sigma,
        "sigma source": report.sigma_source,
        "renormalized": (
            ", ".join(_halve(_) for _ in report.renormalized)
            if report.renormalized is not None
            else None
        ),
        "gamma4 bound": report.gamma4_bound,
    }
    return pd.DataFrame(
        [{"field": key, "value": value} for key, value in values.items() if value is not None]
    )


def checks_table(results: Sequence[CheckResult]) -> pd.DataFrame:
    """Verification outcomes, one row each."""
    return pd.DataFrame(
        [asdict(result) for result in results],
        columns=["check", "subject", "passed", "detail", "counterexample"],
    )


def write_tables(tables: Dict[str, pd.DataFrame], directory: Union[str, Path]) -> List[Path]:
    """Write every table as ``<name>.csv`` into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, table in tables.items():
        path = directory / f"{name}.csv"
        table.to_csv(path, index=False)
        written.append(path)
    return written
