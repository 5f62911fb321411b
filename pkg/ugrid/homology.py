"""Homology of δ-graded complexes over ``F[U]``.

The reduction repeatedly cancels the differential entry of smallest
``U``-power, taking the highest source grading first among equal powers.
A power-zero entry is an ordinary Gaussian cancellation; an entry of power
``k >= 1`` that is minimal among all entries splits off a summand
``x -> U^k y``, which contributes ``F[U]/(U^k)`` generated by ``y``.
In both cases every other entry ``z -> y`` and ``x -> w`` produces the
zig-zag entry ``z -> w`` of power ``a + b - k``. Generators surviving the
reduction span the free part.
"""

import heapq
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from loguru import logger as log

from .complex import UComplex, d_squared_defects, homogeneity_defects
from .types import NotAComplex, NotDivisible, SizeLimitExceeded

ORACLE_LIMIT = 40000
"""Largest vector space dimension handed to the dense oracle."""


@dataclass(frozen=True)
class GradedModule:
    """A finitely generated graded ``F[U]``-module.

    Attributes:
        free: doubled δ-grading of the generator of every ``F[U]`` summand
        torsion: ``(2δ, k)`` for every ``F[U]/(U^k)`` summand; the grading is
            that of the generator at the top of the tower
    """

    free: Tuple[int, ...] = ()
    torsion: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "free", tuple(sorted(int(_) for _ in self.free)))
        object.__setattr__(
            self,
            "torsion",
            tuple(sorted((int(g), int(k)) for g, k in self.torsion)),
        )

    @property
    def free_rank(self) -> int:
        """Number of free summands."""
        return len(self.free)

    def mod_u_dimensions(self, power: int) -> Dict[int, int]:
        """Graded dimensions of the homology of the complex reduced mod ``U^power``.

        A free summand at ``g`` gives a class in each of ``g, g-2, ...``;
        a torsion summand ``x -> U^m y`` gives the classes ``U^j y`` with
        ``j < min(m, power)`` and the cycles ``U^j x`` with ``j + m >= power``.
        """
        dimensions: Counter = Counter()
        for grading in self.free:
            for j in range(power):
                dimensions[grading - 2 * j] += 1
        for grading, length in self.torsion:
            for j in range(min(length, power)):
                dimensions[grading - 2 * j] += 1
            bottom = grading - 2 * length + 2
            for j in range(max(0, power - length), power):
                dimensions[bottom - 2 * j] += 1
        return {grading: count for grading, count in sorted(dimensions.items()) if count}

    def divide_v_factor(self, copies: int) -> "GradedModule":
        """Undo ``⊗ V^copies``, where ``V`` has two generators in grading 0.

        Raises:
            NotDivisible: if some multiplicity is not divisible by ``2^copies``
        """
        divisor = 2**copies
        free = Counter(self.free)
        torsion = Counter(self.torsion)
        for summand, multiplicity in list(free.items()) + list(torsion.items()):
            if multiplicity % divisor:
                raise NotDivisible(
                    f"Summand {summand} occurs {multiplicity} times, "
                    f"not divisible by 2^{copies}."
                )
        return GradedModule(
            free=tuple(g for g, m in free.items() for _ in range(m // divisor)),
            torsion=tuple(t for t, m in torsion.items() for _ in range(m // divisor)),
        )

    def tensor_w(self, copies: int) -> "GradedModule":
        """Tensor with ``W^copies``, where ``W`` has generators in gradings 0 and -1."""
        result = self
        for _ in range(copies):
            result = GradedModule(
                free=tuple(g + shift for g in result.free for shift in (0, -2)),
                torsion=tuple(
                    (g + shift, k) for g, k in result.torsion for shift in (0, -2)
                ),
            )
        return result

    def dual(self, component_count: int = 1) -> "GradedModule":
        """Homology of ``Hom(C, F[U])`` shifted by ``1 - ℓ``; the module of the mirror."""
        shift = 2 * (component_count - 1)
        return GradedModule(
            free=tuple(-g - shift for g in self.free),
            torsion=tuple((-g + 2 * k - 2 - shift, k) for g, k in self.torsion),
        )

    def to_dict(self) -> Dict[str, List]:
        """Machine readable form with doubled gradings."""
        return {"free": list(self.free), "torsion": [list(_) for _ in self.torsion]}

    @classmethod
    def from_dict(cls, dictionary: Dict[str, List]) -> "GradedModule":
        """Inverse of ``to_dict``."""
        return cls(
            free=tuple(dictionary.get("free", [])),
            torsion=tuple(tuple(_) for _ in dictionary.get("torsion", [])),
        )

    def __str__(self) -> str:
        def grading(value: int) -> str:
            return str(value // 2) if value % 2 == 0 else f"{value}/2"

        parts = [
            f"F[U]_({grading(g)})^{m}" if m > 1 else f"F[U]_({grading(g)})"
            for g, m in sorted(Counter(self.free).items(), reverse=True)
        ]
        for (g, k), m in sorted(Counter(self.torsion).items(), reverse=True):
            quotient = "F[U]/(U)" if k == 1 else f"F[U]/(U^{k})"
            parts.append(f"({quotient})_({grading(g)})" + (f"^{m}" if m > 1 else ""))
        return " + ".join(parts) or "0"


@dataclass
class ReductionTrace:
    """Record of a reduction.

    Attributes:
        pairs: cancelled ``(source, target, power)`` in pivot order
        fill_in: number of entries created by zig-zag updates
        removed: number of entries removed by zig-zag updates
    """

    pairs: List[Tuple[int, int, int]] = field(default_factory=list)
    fill_in: int = 0
    removed: int = 0


class _Reduction:
    """Mutable state of one reduction run.

    Pivots come out of one heap ordered by power, then by descending source
    grading, then by the Markowitz cost ``(|column| - 1)(|row| - 1)`` and
    finally by the ids. Costs are refreshed lazily when an entry is popped.
    """

    def __init__(self, complex_: UComplex) -> None:
        self.delta2: List[int] = [int(_) for _ in complex_.delta2]
        self.forward: Dict[int, Dict[int, int]] = {
            source: dict(row) for source, row in complex_.differential.items()
        }
        self.backward: Dict[int, Dict[int, int]] = complex_.transpose()
        self.alive = set(range(complex_.size))
        self.heap: List[Tuple[int, int, int, int, int]] = [
            self._key(s, t, power) for s, t, power in complex_.entries()
        ]
        heapq.heapify(self.heap)
        self.trace = ReductionTrace()
        self.torsion: List[Tuple[int, int]] = []

    def _cost(self, source: int, target: int) -> int:
        return (len(self.forward[source]) - 1) * (len(self.backward[target]) - 1)

    def _key(self, source: int, target: int, power: int) -> Tuple[int, int, int, int, int]:
        return (power, -self.delta2[source], self._cost(source, target), source, target)

    def _toggle(self, source: int, target: int, power: int) -> None:
        row = self.forward.setdefault(source, {})
        if target in row:
            if row[target] != power:
                raise NotAComplex(
                    f"Entry {source}->{target} has power {row[target]}, "
                    f"cancellation produced {power}."
                )
            del row[target]
            del self.backward[target][source]
            self.trace.removed += 1
        else:
            row[target] = power
            self.backward.setdefault(target, {})[source] = power
            heapq.heappush(self.heap, self._key(source, target, power))
            self.trace.fill_in += 1

    def _drop(self, generator: int) -> None:
        for target in self.forward.pop(generator, {}):
            self.backward[target].pop(generator, None)
        for source in self.backward.pop(generator, {}):
            self.forward[source].pop(generator, None)
        self.alive.discard(generator)

    def next_pivot(self) -> Optional[Tuple[int, int, int]]:
        """Pop the cheapest live entry of least power, or None if the differential vanished."""
        while self.heap:
            power, grading, cost, source, target = heapq.heappop(self.heap)
            if self.forward.get(source, {}).get(target) != power:
                continue
            current = self._cost(source, target)
            if current > cost:
                heapq.heappush(self.heap, (power, grading, current, source, target))
                continue
            return source, target, power
        return None

    def cancel(self, source: int, target: int, power: int) -> None:
        """Split off ``source -> U^power target``."""
        if self.forward.get(source, {}).get(target) != power:
            raise NotAComplex(f"No entry {source}->{target} of power {power} to cancel.")
        into_target = [
            (z, a) for z, a in self.backward.get(target, {}).items() if z != source
        ]
        out_of_source = [
            (w, b) for w, b in self.forward.get(source, {}).items() if w != target
        ]
        self._drop(source)
        self._drop(target)
        for z, a in into_target:
            for w, b in out_of_source:
                self._toggle(z, w, a + b - power)
        if power:
            self.torsion.append((int(self.delta2[target]), power))
        self.trace.pairs.append((source, target, power))

    def module(self) -> GradedModule:
        """The module read off once the differential has vanished."""
        return GradedModule(
            free=tuple(int(self.delta2[_]) for _ in self.alive),
            torsion=tuple(self.torsion),
        )


def _check_homogeneous(complex_: UComplex) -> None:
    defects = homogeneity_defects(complex_, limit=1)
    if defects:
        raise NotAComplex(f"Entry {defects[0]} does not match the gradings.")


def reduce_complex(
    complex_: UComplex, check: bool = True
) -> Tuple[GradedModule, ReductionTrace]:
    """Compute the homology of ``complex_`` together with the reduction trace.

    Args:
        complex_: the complex
        check: verify homogeneity and ``∂∘∂ = 0`` first
    Raises:
        NotAComplex: if the differential does not square to zero or is not
            homogeneous
    """
    if check:
        _check_homogeneous(complex_)
        defects = d_squared_defects(complex_, limit=1)
        if defects:
            raise NotAComplex(f"d^2 != 0, first defect {defects[0]}.")
    reduction = _Reduction(complex_)
    while True:
        pivot = reduction.next_pivot()
        if pivot is None:
            break
        reduction.cancel(*pivot)
    module = reduction.module()
    log.debug(
        f"Reduced {complex_.size} generators with {len(reduction.trace.pairs)} "
        f"cancellations and fill-in {reduction.trace.fill_in}."
    )
    return module, reduction.trace


def homology(complex_: UComplex, check: bool = True) -> GradedModule:
    """The homology of ``complex_`` as a graded module."""
    return reduce_complex(complex_, check=check)[0]


def replay(complex_: UComplex, trace: ReductionTrace) -> GradedModule:
    """Re-apply the cancellations of ``trace`` to ``complex_``.

    Raises:
        NotAComplex: if a recorded pivot is missing or the differential does
            not vanish afterwards
    """
    reduction = _Reduction(complex_)
    for source, target, power in trace.pairs:
        reduction.cancel(source, target, power)
    if reduction.next_pivot() is not None:
        raise NotAComplex("Differential survives the recorded cancellations.")
    return reduction.module()


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over the two-element field of rows given as integer bitsets."""
    pivots: Dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def homology_mod_uk_oracle(
    complex_: UComplex, power: int, limit: int = ORACLE_LIMIT
) -> Dict[int, int]:
    """Graded dimensions of the homology of the complex reduced mod ``U^power``.

    Works on the vector space with basis ``U^j x`` for ``0 <= j < power`` and
    plain Gaussian elimination per grading, independent of ``homology``.

    Raises:
        SizeLimitExceeded: if the vector space is larger than ``limit``
        NotAComplex: if an entry does not match the gradings
    """
    if power < 1:
        raise ValueError("power must be at least 1.")
    _check_homogeneous(complex_)
    if complex_.size * power > limit:
        raise SizeLimitExceeded(
            f"Oracle needs dimension {complex_.size * power} > {limit}."
        )
    basis: Dict[int, Dict[Tuple[int, int], int]] = {}
    for generator in range(complex_.size):
        for j in range(power):
            grading = int(complex_.delta2[generator]) - 2 * j
            index = basis.setdefault(grading, {})
            index[(generator, j)] = len(index)
    ranks: Dict[int, int] = {}
    for grading, index in basis.items():
        lower = basis.get(grading - 2, {})
        rows = []
        for generator, j in index:
            row = 0
            for target, entry in complex_.differential.get(generator, {}).items():
                if j + entry < power:
                    row ^= 1 << lower[(target, j + entry)]
            rows.append(row)
        ranks[grading] = gf2_rank(rows)
    dimensions = {}
    for grading, index in sorted(basis.items()):
        dimension = len(index) - ranks[grading] - ranks.get(grading + 2, 0)
        if dimension:
            dimensions[grading] = dimension
    return dimensions
