"""Manages access and information about ugrid's check plug-ins."""

import functools
import importlib.metadata as mt
from typing import Callable, Dict, List, Optional

from loguru import logger as log

from .checks import BUILTIN_CHECKS
from .types import InputError, PlugIn, PlugInSpec

CHECK_GROUP = "ugrid.checks"
"""Entry-point group of the verification checks."""


def _access_entry_point(name: str, group: str) -> Optional[PlugIn]:
    candidates = mt.entry_points().select(name=name, group=group)

    if len(candidates) == 1:
        plugin: PlugIn = candidates[name].load()
        log.debug(f"Got {name} from {group}.")
        return plugin
    if group == CHECK_GROUP and name in BUILTIN_CHECKS:
        log.debug(f"{name} is not installed as an entry point, using the shipped check.")
        return BUILTIN_CHECKS[name]
    return None


@functools.singledispatch
def get_check(spec: PlugInSpec, group: str = CHECK_GROUP) -> Callable:
    """Get a check.

    Args:
        spec: which check and optional configuration
        group: plug-in group to retrieve from
    Returns:
        The check's callable with its configuration bound
    Raises:
        InputError: if the spec's name is not found
    """
    raise NotImplementedError(f"Unsupported check specification {spec!r}.")


@get_check.register(str)
def _(spec: str, group: str = CHECK_GROUP) -> Callable:
    plugin = _access_entry_point(spec, group)
    if not plugin:
        raise InputError(f"{spec} could not be found in {group}")
    return functools.partial(plugin.callable, configuration=plugin.default_configuration)


@get_check.register(dict)
def _(spec: dict, group: str = CHECK_GROUP) -> Callable:
    if len(spec.keys()) > 1:
        log.warning(
            f"Requested specification {spec} has more than one check. "
            "Using the first instance found"
        )
    for name, configuration in spec.items():
        plugin = _access_entry_point(name, group)
        if not plugin:
            raise InputError(f"{spec} could not be found in {group}")
        return functools.partial(
            plugin.callable,
            configuration={**plugin.default_configuration, **(configuration or {})},
        )
    raise InputError("Empty check specification.")


def check_name(spec: PlugInSpec) -> str:
    """The plug-in name of a spec."""
    return spec if isinstance(spec, str) else next(iter(spec))


def list_checks(group: str = CHECK_GROUP) -> Dict[str, str]:
    """All available checks with their summaries."""
    names: List[str] = sorted(
        {entry.name for entry in mt.entry_points().select(group=group)}
        | (set(BUILTIN_CHECKS) if group == CHECK_GROUP else set())
    )
    return {
        name: _access_entry_point(name, group).metadata.get("summary", "")
        for name in names
    }
