"""υ, υ-sets and their renormalization."""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from loguru import logger as log

from .complex import build_complex
from .grid import GridDiagram, PlanarRealization, trace_components
from .homology import GradedModule, homology
from .signature import signature_from_grid
from .types import Configuration, InputError, NotDivisible


@dataclass(frozen=True)
class UpsilonSet:
    """Sorted doubled gradings ``2υ_1 <= ... <= 2υ_r`` of a free generating set."""

    values2: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values2", tuple(sorted(self.values2)))

    @property
    def values(self) -> Tuple[Fraction, ...]:
        """The υ-values themselves."""
        return tuple(Fraction(_, 2) for _ in self.values2)

    @property
    def minimum(self) -> Fraction:
        """υ_min."""
        return Fraction(self.values2[0], 2)

    @property
    def maximum(self) -> Fraction:
        """υ_max."""
        return Fraction(self.values2[-1], 2)

    def __len__(self) -> int:
        return len(self.values2)


@dataclass(frozen=True)
class RenormalizedUpsilonSet:
    """Doubled values ``2υ'_i = 2υ_i - (σ - ℓ + 1)``."""

    values2: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values2", tuple(sorted(self.values2)))

    @property
    def values(self) -> Tuple[Fraction, ...]:
        """The renormalized values."""
        return tuple(Fraction(_, 2) for _ in self.values2)

    def mirrored(self) -> "RenormalizedUpsilonSet":
        """The renormalized set of the mirror link."""
        return RenormalizedUpsilonSet(tuple(-_ for _ in self.values2))


@lru_cache(maxsize=64)
def _link_module(
    grid: GridDiagram, max_index: int, huge: bool, threads: int, check: bool
) -> GradedModule:
    configuration = Configuration(max_index=max_index, huge=huge, threads=threads)
    ell = trace_components(grid).component_count
    raw = homology(build_complex(grid, configuration), check=check)
    return raw.divide_v_factor(grid.n - ell)


def link_module(
    grid: GridDiagram, configuration: Optional[Configuration] = None
) -> GradedModule:
    """Grid homology of ``grid`` with the ``V^(n-ℓ)`` factor removed.

    Results are cached per grid and enumeration settings.
    """
    configuration = configuration or Configuration()
    return _link_module(
        grid,
        configuration.max_index,
        configuration.huge,
        configuration.threads,
        configuration.check_complex,
    )


def upsilon_set(
    grid: GridDiagram, configuration: Optional[Configuration] = None
) -> UpsilonSet:
    """The υ-set of the oriented link presented by ``grid``.

    Raises:
        NotDivisible: if the free part does not have rank ``2^(ℓ-1)``
    """
    ell = trace_components(grid).component_count
    module = link_module(grid, configuration)
    if module.free_rank != 2 ** (ell - 1):
        raise NotDivisible(
            f"Free rank {module.free_rank} differs from 2^{ell - 1} for {grid}."
        )
    result = UpsilonSet(module.free)
    log.debug(f"υ-set of {grid}: {[str(_) for _ in result.values]}.")
    return result


def upsilon(grid: GridDiagram, configuration: Optional[Configuration] = None) -> int:
    """υ of the knot presented by ``grid``.

    Raises:
        InputError: if ``grid`` presents a link with more than one component
    """
    ell = trace_components(grid).component_count
    if ell != 1:
        raise InputError(f"υ needs a knot, {grid} has {ell} components.")
    return upsilon_set(grid, configuration).values2[0] // 2


def renormalize(
    values: UpsilonSet, sigma: int, component_count: int
) -> RenormalizedUpsilonSet:
    """Shift a υ-set by ``(σ - ℓ + 1) / 2``."""
    shift = sigma - component_count + 1
    return RenormalizedUpsilonSet(tuple(_ - shift for _ in values.values2))


def renormalized_upsilon_set(
    grid: GridDiagram,
    sigma: Optional[int] = None,
    configuration: Optional[Configuration] = None,
) -> RenormalizedUpsilonSet:
    """The renormalized υ-set; σ is computed from the grid when not given."""
    if sigma is None:
        sigma = signature_from_grid(PlanarRealization(grid))
    ell = trace_components(grid).component_count
    return renormalize(upsilon_set(grid, configuration), sigma, ell)


def mirror_upsilon_set(values: UpsilonSet, component_count: int) -> UpsilonSet:
    """The υ-set of the mirror link, ``{-υ_i - (ℓ - 1)}``."""
    shift = 2 * (component_count - 1)
    return UpsilonSet(tuple(-_ - shift for _ in values.values2))


def gamma4_lower_bound(upsilon_value: int, sigma: int) -> int:
    """``⌈|υ - σ/2|⌉``, a lower bound for the smooth 4-dimensional crosscap number."""
    return math.ceil(abs(Fraction(upsilon_value) - Fraction(sigma, 2)))
