"""Command Line Interface definitions for ugrid.

Commands
--------

- ``hom``: homology, υ data, σ and the γ4 bound of one grid
- ``verify``: run verification checks, exit code 1 on any failure
- ``torus``: closed formulas for a torus knot
- ``band``: maps of a band move at two adjacent columns
- ``list``: built-in grids and installed checks

Input errors exit with code 2, exceeded size limits with code 3.
"""

import dataclasses
import functools
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import click
import pandas as pd
import yaml
from loguru import logger as log

from .checks.common import Subject, random_subjects
from .checks.maps import pair_defects
from .closed_forms import (
    m_sequence,
    torus_alexander,
    torus_genus,
    upsilon_from_alexander,
    upsilon_torus_3q,
)
from .cobordism import oriented_saddle, unorientable_band, unorientable_saddle
from .grid import trace_components
from .homology import GradedModule
from .invariants import gamma4_lower_bound, upsilon_set
from .library import LIBRARY, builtins_up_to, resolve_grid
from .pipeline import HomologyJob
from .plugin_manager import check_name, get_check, list_checks
from .report import (
    BandReport,
    Report,
    TorusReport,
    checks_table,
    grid_payload,
    module_table,
    summary_table,
    write_tables,
)
from .signature import signature_torus_check
from .types import (
    CheckResult,
    Configuration,
    InputError,
    NotInTable,
    PlugInSpec,
    SizeLimitExceeded,
    UGridError,
    from_dict,
)

QUICK_CHECKS: List[PlugInSpec] = [
    "d_squared",
    "homogeneity",
    "oracle",
    "wrbraid",
    "mirror",
    "stabilization",
    {"disjoint_union": {"max_index": 7}},
    "crossing_change",
    "oriented_saddle",
    "unorientable_saddle",
    "signature",
]
RANDOM_CHECKS: List[PlugInSpec] = [
    "d_squared",
    "homogeneity",
    "oracle",
    {"wrbraid": {"random": 0}},
    "mirror",
    "signature",
]
COBORDISM_CHECKS: List[PlugInSpec] = [
    {"crossing_change": {"columns": None}},
    {"oriented_saddle": {"columns": None}},
    {"unorientable_saddle": {"columns": None}},
]


def _configure_logging(verbose: int, logfile: Optional[str]) -> None:
    logging_level = max(50 - (10 * verbose), 0)  # between 0 and 50
    log.configure(
        handlers=[{"sink": logfile or sys.stderr, "level": logging_level}], extra={}
    )
    log.debug(f"Starting logging with verbosity {logging_level}.")


def logging_options(function: Callable) -> Callable:
    """Add ``-v/--verbose`` and ``-l/--logfile`` and configure loguru from them."""

    @click.option("-v", "--verbose", count=True)
    @click.option(
        "-l", "--logfile", type=click.Path(dir_okay=False, writable=True, path_type=str)
    )
    @functools.wraps(function)
    def wrapper(*args, verbose: int = 0, logfile: Optional[str] = None, **kwargs):
        _configure_logging(verbose, logfile)
        return function(*args, **kwargs)

    return wrapper


def exit_codes(function: Callable) -> Callable:
    """Map input errors to exit code 2, size limits to 3 and other failures to 1."""

    @functools.wraps(function)
    def wrapper(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except InputError as error:
            click.echo(f"input error: {error}", err=True)
            sys.exit(2)
        except SizeLimitExceeded as error:
            click.echo(f"size limit: {error}", err=True)
            sys.exit(3)
        except UGridError as error:
            click.echo(f"{type(error).__name__}: {error}", err=True)
            sys.exit(1)

    return wrapper


def _settings(suite: Optional[Path] = None, **overrides) -> Configuration:
    """Global settings from an optional YAML suite and command line overrides."""
    configuration = Configuration()
    if suite is not None:
        with suite.open("r", encoding="utf8") as file:
            configuration = from_dict(Configuration, yaml.safe_load(file) or {})
    changes = {key: value for key, value in overrides.items() if value is not None}
    try:
        return dataclasses.replace(configuration, **changes)
    except ValueError as error:
        raise InputError(str(error)) from error


def _emit(tables: Dict[str, pd.DataFrame], payload: str, as_json: bool, csv: Optional[Path]):
    if as_json:
        click.echo(payload)
    else:
        for name, table in tables.items():
            if not table.empty:
                click.echo(f"--- {name} ---")
                click.echo(table.to_string(index=False))
    if csv is not None:
        for path in write_tables(tables, csv):
            log.info(f"Wrote {path}.")


@click.group()
@click.pass_context
@log.catch
def cli(ctx):
    """Unoriented grid homology, υ and signatures of knots and links."""
    ctx.ensure_object(dict)


@cli.command()
@click.argument("grid", type=click.STRING)
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
@click.option("--dump", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--sigma", type=click.STRING, default=None, help="auto, none or external:<int>")
@click.option("--threads", type=click.IntRange(min=1), default=None)
@click.option("--huge", is_flag=True, default=None)
@click.option("--max-index", type=click.IntRange(min=1), default=None)
@click.option("--db", "db_url", type=click.STRING, default=None)
@click.option("--csv", type=click.Path(file_okay=False, path_type=Path), default=None)
@logging_options
@exit_codes
def hom(
    grid: str,
    as_json: bool,
    dump: Optional[Path],
    sigma: Optional[str],
    threads: Optional[int],
    huge: Optional[bool],
    max_index: Optional[int],
    db_url: Optional[str],
    csv: Optional[Path],
):
    """Compute the homology of GRID, a file or builtin:<name>."""
    settings = _settings(
        sigma=sigma, threads=threads, huge=huge or None, max_index=max_index, db_url=db_url
    )
    report = HomologyJob(settings, dump=dump).run(grid)
    tables = {"summary": summary_table(report)}
    if report.module is not None:
        tables["module"] = module_table(GradedModule.from_dict(report.module))
    _emit(tables, report.to_json(), as_json, csv)


def _scopes(
    grids: Sequence[str],
    settings: Configuration,
    quick: bool,
    random: int,
    cobordism: bool,
    paper: bool,
) -> List[Tuple[List[PlugInSpec], List[Subject]]]:
    given = [resolve_grid(_) for _ in grids]
    scopes = []
    if cobordism:
        scopes.append((COBORDISM_CHECKS, given or [("builtin:trefoil", LIBRARY["trefoil"].grid)]))
    if paper:
        scopes.append((["paper"], given or [(f"builtin:{e.name}", e.grid) for e in LIBRARY.values()]))
    count = random or settings.random_grids
    if count:
        scopes.append(
            (
                RANDOM_CHECKS,
                random_subjects(count, 2, settings.random_max_index, settings.seed),
            )
        )
    if quick or not scopes:
        subjects = given or [
            (f"builtin:{e.name}", e.grid) for e in builtins_up_to(settings.quick_index)
        ]
        scopes.append((settings.checks or QUICK_CHECKS, subjects))
    return scopes


@cli.command()
@click.argument("grids", nargs=-1, type=click.STRING)
@click.option("--quick", is_flag=True, help="Built-ins up to the quick index.")
@click.option("--random", type=click.IntRange(min=0), default=0, help="Random grids.")
@click.option("--cobordism", is_flag=True, help="Crossing change and band maps.")
@click.option("--paper", is_flag=True, help="Expected values of the built-ins.")
@click.option("--check", "checks", multiple=True, help="Run only these checks.")
@click.option("--suite", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--seed", type=int, default=None)
@click.option("--max-index", type=click.IntRange(min=2), default=None)
@click.option("--threads", type=click.IntRange(min=1), default=None)
@click.option("--huge", is_flag=True, default=None)
@click.option("--json", "as_json", is_flag=True)
@click.option("--csv", type=click.Path(file_okay=False, path_type=Path), default=None)
@logging_options
@exit_codes
def verify(
    grids: Tuple[str, ...],
    quick: bool,
    random: int,
    cobordism: bool,
    paper: bool,
    checks: Tuple[str, ...],
    suite: Optional[Path],
    seed: Optional[int],
    max_index: Optional[int],
    threads: Optional[int],
    huge: Optional[bool],
    as_json: bool,
    csv: Optional[Path],
):
    """Run verification checks on GRIDS or on the built-in library.

    ``--max-index`` bounds the index of random grids.
    """
    settings = _settings(
        suite,
        seed=seed,
        random_max_index=max_index,
        threads=threads,
        huge=huge or None,
    )
    results: List[CheckResult] = []
    for specs, subjects in _scopes(grids, settings, quick, random, cobordism, paper):
        if checks:
            specs = [spec for spec in specs if check_name(spec) in checks] or list(checks)
        for spec in specs:
            log.info(f"Running {check_name(spec)} on {len(subjects)} subjects.")
            results.extend(get_check(spec)(subjects, settings))
    report = Report(subject="verify", checks=results)
    failures = [result for result in results if not result.passed]
    _emit({"checks": checks_table(results)}, report.to_json(), as_json, csv)
    if failures:
        for failure in failures:
            click.echo(
                f"FAILED {failure.check} on {failure.subject}: {failure.detail}",
                err=True,
            )
            for entry in failure.counterexample:
                click.echo(f"    {entry}", err=True)
        sys.exit(1)


@cli.command()
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.option("--json", "as_json", is_flag=True)
@logging_options
@exit_codes
def torus(p: int, q: int, as_json: bool):
    """Closed form υ of the torus knot T(P, Q)."""
    data = torus_alexander(p, q)
    value = upsilon_from_alexander(data)
    sigma = None
    for key in ((p, q), (q, p)):
        try:
            sigma = signature_torus_check(*key)
            break
        except NotInTable:
            continue
    three = q if p == 3 else p if q == 3 else None
    report = TorusReport(
        p=p,
        q=q,
        exponents=list(data.exponents),
        m_sequence=list(m_sequence(data).values),
        upsilon=value,
        genus=torus_genus(p, q),
        upsilon_3q=upsilon_torus_3q(three) if three is not None else None,
        sigma=sigma,
        gamma4_bound=gamma4_lower_bound(value, sigma) if sigma is not None else None,
    )
    table = pd.DataFrame(
        [
            {"field": key, "value": item}
            for key, item in dataclasses.asdict(report).items()
            if item is not None
        ]
    )
    _emit({"torus": table}, report.to_json(), as_json, None)


@cli.command()
@click.argument("grid", type=click.STRING)
@click.option("--col", "column", type=click.IntRange(min=0), required=True)
@click.option("--unorientable", is_flag=True, help="Attach the unorientable band.")
@click.option("--max-index", type=click.IntRange(min=1), default=None)
@click.option("--json", "as_json", is_flag=True)
@logging_options
@exit_codes
def band(grid: str, column: int, unorientable: bool, max_index: Optional[int], as_json: bool):
    """Band move at columns COL and COL + 1 of GRID, with identity checks."""
    settings = _settings(max_index=max_index)
    subject, diagram = resolve_grid(grid)
    if unorientable:
        target, first, second, e = unorientable_saddle(diagram, column, settings)
        epsilon = unorientable_band(diagram, column)[1].epsilon
    else:
        target, first, second = oriented_saddle(diagram, column, settings)
        e, epsilon = 0, 0
    defects = pair_defects(first, second, 5)
    values = {}
    for label, side in (("source", diagram), ("target", target)):
        if trace_components(side).component_count == 1:
            values[label] = upsilon_set(side, settings).values2[0] // 2
    report = BandReport(
        subject=subject,
        column=column,
        orientable=not unorientable,
        target=grid_payload(target),
        euler_number=e,
        epsilon=epsilon,
        shifts={
            first.name: sorted(first.measured_shifts()),
            second.name: sorted(second.measured_shifts()),
        },
        upsilon=values,
        checks=[
            CheckResult(
                check="band",
                subject=f"{subject} columns {column},{column + 1}",
                passed=not defects,
                detail=f"declared shifts {first.declared_shift}, {second.declared_shift}",
                counterexample=defects,
            )
        ],
    )
    table = pd.DataFrame(
        [
            {"field": "target", "value": f"O {list(target.o_rows)} X {list(target.x_rows)}"},
            {"field": "euler number", "value": e},
            {"field": "epsilon", "value": epsilon},
        ]
        + [
            {"field": f"2δ shift of {name}", "value": shifts}
            for name, shifts in report.shifts.items()
        ]
        + [{"field": f"υ {label}", "value": value} for label, value in values.items()]
    )
    _emit({"band": table, "checks": checks_table(report.checks)}, report.to_json(), as_json, None)
    if not report.passed:
        sys.exit(1)


@cli.command(name="list")
def list_():
    """List built-in grids and checks."""
    click.echo("--- built-ins ---")
    for entry in LIBRARY.values():
        click.echo(f"builtin:{entry.name} (index {entry.grid.n}): {entry.description}")
    click.echo("--- checks ---")
    for name, summary in list_checks().items():
        click.echo(f"{name}: {summary}")
