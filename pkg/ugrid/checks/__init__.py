"""Verification checks.

Each check is a ``PlugIn`` whose callable takes the subjects, the global
``Configuration`` and its own configuration dictionary and returns a list
of ``CheckResult``. Checks are registered under the ``ugrid.checks``
entry-point group; ``BUILTIN_CHECKS`` mirrors that table for source
checkouts without installed metadata.
"""

from .algebra import d_squared, homogeneity, oracle
from .library import paper
from .maps import crossing_change, oriented_saddle_moves, unorientable_saddle_moves
from .signature import signature
from .symmetry import disjoint_union, mirror_law, stabilization, wrbraid

BUILTIN_CHECKS = {
    "d_squared": d_squared,
    "homogeneity": homogeneity,
    "oracle": oracle,
    "wrbraid": wrbraid,
    "mirror": mirror_law,
    "stabilization": stabilization,
    "disjoint_union": disjoint_union,
    "crossing_change": crossing_change,
    "oriented_saddle": oriented_saddle_moves,
    "unorientable_saddle": unorientable_saddle_moves,
    "signature": signature,
    "paper": paper,
}
"""Shipped checks by entry-point name."""
