# pylint: disable=R

"""Type definitions, configuration and errors for ugrid.

The configuration object doubles as the schema for verification suites
written in YAML, see ``tests/stubs/quick.ugrid.yml`` for an example.
"""
import re
from dataclasses import field, fields, is_dataclass
from typing import Callable, Dict, List, Literal, Optional, Type, TypeVar, Union

from pydantic.dataclasses import dataclass

PlugInSpec = Union[str, Dict[str, Dict]]
"""Plug-In Definition Notation.

Allows either a ``str`` or a dictionary with a single key.
"""

SigmaMode = Union[Literal["auto", "none"], str]
"""Either ``auto``, ``none`` or ``external:<int>``."""

HUGE_INDEX = 11
"""Largest grid index reachable with the ``huge`` flag."""

_EXTERNAL_SIGMA_ = re.compile(r"^external:(-?\d+)$")


@dataclass()
class Configuration:
    """Configuration wrapper.

    Attributes:
        max_index (int, optional): Largest grid index enumerated without ``huge``.
            Defaults to 10.
        huge (bool, optional): Allow index-11 grids. Defaults to False.
        threads (int, optional): Workers used for rectangle enumeration.
            Defaults to 1.
        seed (int, optional): Seed for random grids. Defaults to 7.
        sigma (SigmaMode, optional): How signatures are obtained. Defaults to "auto".
        db_url (str, optional): Where reports are stored. Defaults to None.
        check_complex (bool, optional): Verify d² = 0 before reducing.
            Defaults to True.
        quick_index (int, optional): Largest built-in index in quick suites.
            Defaults to 6.
        random_grids (int, optional): Number of random grids per randomized check.
            Defaults to 0.
        random_max_index (int, optional): Largest index of random grids. Defaults to 6.
        checks (List[PlugInSpec], optional): Checks to run in ``verify``.
            Defaults to all registered checks.
    """

    max_index: int = 10
    huge: bool = False
    threads: int = 1
    seed: int = 7
    sigma: SigmaMode = "auto"
    db_url: Optional[str] = None
    check_complex: bool = True
    quick_index: int = 6
    random_grids: int = 0
    random_max_index: int = 6
    checks: List[PlugInSpec] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.max_index < 1:
            raise ValueError("max_index must be positive.")
        if self.threads < 1:
            raise ValueError("threads must be at least 1.")
        if self.random_max_index < 2:
            raise ValueError("random_max_index must be at least 2.")
        if self.sigma not in ("auto", "none") and not _EXTERNAL_SIGMA_.match(
            self.sigma
        ):
            raise ValueError(
                f"sigma must be 'auto', 'none' or 'external:<int>', got {self.sigma}."
            )

    @property
    def external_sigma(self) -> Optional[int]:
        """The externally supplied signature, if any."""
        match = _EXTERNAL_SIGMA_.match(self.sigma)
        return int(match.group(1)) if match else None

    def index_allowed(self, n: int) -> bool:
        """Whether a grid of index ``n`` may be enumerated."""
        return n <= self.max_index or (self.huge and n <= HUGE_INDEX)


T = TypeVar("T")


def from_dict(cls: Type[T], dictionary: dict) -> T:
    """convert a dictionary to a dataclass

    warning:
        types and keys in the dataclass and the dictionary must match exactly.

    args:
        cls : Type[T] : the dataclass to convert to

    dictionary : dict : the dictionary to convert

    returns:
        the dataclass with values from the dictionary
    """
    field_types = {f.name: f.type for f in fields(cls)}
    return cls(
        **{
            key: (
                from_dict(field_types[key], value)
                if isinstance(value, dict) and is_dataclass(field_types[key])
                else value
            )
            for key, value in dictionary.items()
        }
    )


@dataclass
class CheckResult:
    """Outcome of a single verification.

    Attributes:
        check: name of the check
        subject: what was checked, e.g. a built-in name
        passed: whether the property held
        detail: human readable summary
        counterexample: offending entries, empty on success
    """

    check: str
    subject: str
    passed: bool
    detail: str = ""
    counterexample: List[str] = field(default_factory=list)


@dataclass
class PlugIn:
    """Transports a plug-in and their metadata.

    Attributes:
        default_configuration: configuration used when a check is requested by name
        callable: the plug-in's implementation
        metadata: additional metadata, as authors, documentation, etc.
    """

    default_configuration: Dict
    callable: Callable
    metadata: Dict[str, str]


class UGridError(Exception):
    """Base class of all errors raised by ugrid."""


class InputError(UGridError):
    """Raised on malformed or unsupported input."""


class NotAPermutation(InputError):
    """Marking rows or state rows are not a bijection."""


class CoincidentMarkings(InputError):
    """An O and an X share a square."""


class EmptyGrid(InputError):
    """A grid without columns was requested."""


class GridParseError(InputError):
    """A grid file could not be parsed."""


class NotCoprime(InputError):
    """Torus knot parameters share a factor."""


class OddSignature(InputError):
    """A knot signature must be even."""


class NotInTable(InputError):
    """The requested torus knot is not among the tabulated signatures."""


class InvalidCrossingColumns(InputError):
    """The two columns do not realize a positive crossing change."""


class NotASaddleConfiguration(InputError):
    """Swapping the O-markings does not change the component count by one."""


class NotUnorientableConfiguration(InputError):
    """The requested band resolution is orientation compatible."""


class DegenerateProjection(InputError):
    """The planar projection does not allow a checkerboard surface."""


class SizeLimitExceeded(UGridError):
    """An enumeration would exceed the configured budget."""


class NotAComplex(UGridError):
    """The differential does not square to zero or is not homogeneous."""


class NotDivisible(UGridError):
    """A module does not split off the requested tensor factor."""
