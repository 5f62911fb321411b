"""Helpers shared by the verification checks."""

import dataclasses
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
    Type,
    TypeVar,
    Union,
)

import numpy as np
from loguru import logger as log

from ..grid import GridDiagram, random_grid
from ..types import (
    HUGE_INDEX,
    CheckResult,
    Configuration,
    SizeLimitExceeded,
    UGridError,
    from_dict,
)

Subject = Tuple[str, GridDiagram]
"""A named grid handed to a check."""

T = TypeVar("T")


@dataclasses.dataclass
class CheckConfiguration:
    """Configuration items understood by most checks.

    Attributes:
        max_index: largest index a check enumerates, defaults to the global budget
        limit: number of offending entries reported per failure
    """

    max_index: Optional[int] = None
    limit: int = 5


def index_cap(settings: Configuration, configuration: CheckConfiguration) -> int:
    """The largest grid index a check may enumerate."""
    cap = settings.max_index if configuration.max_index is None else configuration.max_index
    return min(cap, HUGE_INDEX if settings.huge else settings.max_index)


def feasible(subjects: Sequence[Subject], cap: int, margin: int = 0) -> List[Subject]:
    """Subjects whose grids, grown by ``margin`` columns, fit under ``cap``."""
    chosen = [(name, grid) for name, grid in subjects if grid.n + margin <= cap]
    skipped = len(subjects) - len(chosen)
    if skipped:
        log.debug(f"Skipping {skipped} subjects above index {cap - margin}.")
    return chosen


def guarded(check: str, subject: str, body: Callable[[], CheckResult]) -> CheckResult:
    """Run ``body`` and turn consistency errors into failed results.

    Resource errors propagate.
    """
    try:
        return body()
    except SizeLimitExceeded:
        raise
    except UGridError as error:
        log.warning(f"{check} on {subject}: {type(error).__name__}: {error}")
        return CheckResult(
            check=check,
            subject=subject,
            passed=False,
            detail=f"{type(error).__name__}: {error}",
        )


def outcome(
    check: str, subject: str, defects: Iterable, detail: str = "", limit: int = 5
) -> CheckResult:
    """A result that passes exactly when ``defects`` is empty."""
    defects = [str(_) for _ in defects]
    return CheckResult(
        check=check,
        subject=subject,
        passed=not defects,
        detail=detail,
        counterexample=defects[:limit],
    )


def random_subjects(
    count: int, min_index: int, max_index: int, seed: int
) -> List[Subject]:
    """``count`` random grids with indices in ``[min_index, max_index]``.

    The same seed always yields the same grids.
    """
    rng = np.random.default_rng(seed)
    subjects = []
    for number in range(count):
        n = int(rng.integers(min_index, max_index + 1))
        subjects.append((f"random-{number}", random_grid(n, rng)))
    return subjects


def load_configuration(cls: Type[T], configuration: Union[Dict[str, Any], T]) -> T:
    """Convert a plug-in configuration given as a dictionary."""
    if isinstance(configuration, dict):
        return from_dict(cls, configuration)
    return configuration
