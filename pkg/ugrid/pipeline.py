"""The homology job behind ``ugrid hom``.

A job walks through the states

    idle -> loading -> building -> reducing -> analysing -> reporting -> done

and advances on its own after every state change, so a single ``start``
call runs it to completion. Each state's work is done in its ``on_enter``
callback; stage timings end up in the report.
"""

import time
from pathlib import Path
from typing import Any, Dict, Optional, Union

from loguru import logger as log
from transitions import Machine

from .complex import UComplex, build_complex, dump_complex
from .grid import GridDiagram, LinkStructure, PlanarRealization, trace_components
from .homology import GradedModule, ReductionTrace, reduce_complex
from .invariants import UpsilonSet, gamma4_lower_bound, renormalize
from .library import resolve_grid
from .model import insert_report, open_store
from .report import Report, grid_payload
from .signature import signature_from_grid
from .types import Configuration, NotDivisible, from_dict

# pylint: disable=W0613,E1101,R0902


class HomologyJob:
    """Computes the homology and the derived invariants of one grid.

    Args:
        configuration: global settings, a dictionary is converted
        dump: where to write the complex in the UGC v1 format, if anywhere
        auto_transitions: advance automatically after each state change

    Attributes:
        subject: input descriptor
        grid: the grid, set while loading
        complex: the grid complex, set while building
        module: the ``V``-divided homology, set while reducing
        report: the report, set while reporting
    """

    states = [
        "idle",
        {"name": "loading", "on_enter": "load_grid"},
        {"name": "building", "on_enter": "build"},
        {"name": "reducing", "on_enter": "reduce"},
        {"name": "analysing", "on_enter": "analyse"},
        {"name": "reporting", "on_enter": "make_report"},
        {"name": "done", "on_enter": "finalize"},
    ]
    """States of a job; callbacks are named by ``on_enter``."""

    transitions = [
        {"trigger": "start", "source": "idle", "dest": "loading"},
        {"trigger": "build_stage", "source": "loading", "dest": "building"},
        {"trigger": "reduce_stage", "source": "building", "dest": "reducing"},
        {"trigger": "analyse_stage", "source": "reducing", "dest": "analysing"},
        {"trigger": "report_stage", "source": "analysing", "dest": "reporting"},
        {"trigger": "finish", "source": "reporting", "dest": "done"},
    ]
    """Transitions between the states, one per stage."""

    def __init__(
        self,
        configuration: Optional[Union[Dict[str, Any], Configuration]] = None,
        dump: Optional[Union[str, Path]] = None,
        auto_transitions: bool = True,
    ) -> None:
        self.machine = Machine(
            self,
            states=HomologyJob.states,
            initial="idle",
            transitions=HomologyJob.transitions,
            after_state_change="_conditional_advance" if auto_transitions else None,
            queued=True,
            auto_transitions=False,
        )
        if isinstance(configuration, dict):
            configuration = from_dict(Configuration, configuration)
        self.configuration: Configuration = configuration or Configuration()
        self.dump = dump
        self.subject: Optional[str] = None
        self.grid: Optional[GridDiagram] = None
        self.structure: Optional[LinkStructure] = None
        self.complex: Optional[UComplex] = None
        self.trace: Optional[ReductionTrace] = None
        self.module: Optional[GradedModule] = None
        self.upsilon_set: Optional[UpsilonSet] = None
        self.sigma: Optional[int] = None
        self.report: Optional[Report] = None
        self.notes = []
        self.timings: Dict[str, float] = {}
        self._clock_ = time.perf_counter()

    def _conditional_advance(self, *args) -> None:
        """Advances the state machine when the current state is done."""
        if self.state in ("idle", "done"):
            return
        elapsed = time.perf_counter() - self._clock_
        self.timings[self.state] = round(elapsed, 6)
        self._clock_ = time.perf_counter()
        targets = self.machine.get_triggers(self.state)
        log.debug(f"Advancing from {self.state} with {', '.join(targets) or 'nothing'}.")
        for target in targets:
            if self.trigger(target) is True:
                break

    def load_grid(self, spec: Union[str, GridDiagram], name: Optional[str] = None) -> None:
        """Resolve a built-in name or grid file, or take a grid as is."""
        self._clock_ = time.perf_counter()
        if isinstance(spec, GridDiagram):
            self.subject, self.grid = name or str(spec), spec
        else:
            self.subject, self.grid = resolve_grid(spec)
        self.structure = trace_components(self.grid)
        log.info(
            f"Loaded {self.subject}: index {self.grid.n}, "
            f"{self.structure.component_count} components."
        )

    def build(self, *args) -> None:
        """Enumerate states and empty rectangles."""
        self.complex = build_complex(self.grid, self.configuration)
        if self.dump is not None:
            dump_complex(self.complex, self.dump)
            log.info(f"Wrote the complex to {self.dump}.")

    def reduce(self, *args) -> None:
        """Reduce to homology and split off the ``V`` factors."""
        raw, self.trace = reduce_complex(
            self.complex, check=self.configuration.check_complex
        )
        ell = self.structure.component_count
        self.module = raw.divide_v_factor(self.grid.n - ell)
        log.info(f"Homology of {self.subject}: {self.module}.")

    def analyse(self, *args) -> None:
        """Read off the υ-set and obtain σ as configured."""
        ell = self.structure.component_count
        if self.module.free_rank != 2 ** (ell - 1):
            raise NotDivisible(
                f"Free rank {self.module.free_rank} differs from 2^{ell - 1}."
            )
        self.upsilon_set = UpsilonSet(self.module.free)
        external = self.configuration.external_sigma
        if external is not None:
            self.sigma = external
            self.notes.append(f"σ = {external} supplied externally, not computed.")
            log.warning(f"Using the external signature {external} for {self.subject}.")
        elif self.configuration.sigma == "auto":
            self.sigma = signature_from_grid(PlanarRealization(self.grid))

    def make_report(self, *args) -> None:
        """Assemble the report and append it to the store, if one is configured."""
        ell = self.structure.component_count
        is_knot = ell == 1
        upsilon2 = self.upsilon_set.values2[0] if is_knot else None
        self.report = Report(
            subject=self.subject,
            grid=grid_payload(self.grid),
            components=ell,
            module=self.module.to_dict(),
            upsilon=upsilon2 // 2 if is_knot else None,
            upsilon_set=list(self.upsilon_set.values2),
            sigma=self.sigma,
            sigma_source=(
                "none"
                if self.sigma is None
                else "external" if self.configuration.external_sigma is not None else "computed"
            ),
            renormalized=(
                list(renormalize(self.upsilon_set, self.sigma, ell).values2)
                if self.sigma is not None
                else None
            ),
            gamma4_bound=(
                gamma4_lower_bound(upsilon2 // 2, self.sigma)
                if is_knot and self.sigma is not None
                else None
            ),
            notes=list(self.notes),
        )
        if self.configuration.db_url:
            sessions = open_store(self.configuration.db_url)
            with sessions.begin() as session:
                insert_report(session, self.grid, self.report)

    def finalize(self, *args) -> None:
        """Copy the stage timings, the reporting stage included, into the report."""
        self.report.timings = dict(self.timings)

    def run(self, spec: Union[str, GridDiagram], name: Optional[str] = None) -> Report:
        """Run the job to completion and return its report."""
        self.start(spec, name)
        return self.report
