"""Closed formulas for υ of torus knots, L-space knots and alternating knots.

Polynomials are dense lists of integer coefficients, lowest degree first.
"""

from dataclasses import dataclass
from math import gcd
from typing import List, Tuple

from .types import NotCoprime, NotDivisible, OddSignature

Polynomial = List[int]


@dataclass(frozen=True)
class AlexanderData:
    """Exponents ``α_0 > α_1 > ... > α_n`` of a symmetrized Alexander polynomial
    whose coefficients alternate ``+1, -1, +1, ...``.
    """

    exponents: Tuple[int, ...]

    def __post_init__(self) -> None:
        exponents = self.exponents
        if not exponents or len(exponents) % 2 == 0:
            raise ValueError(f"Need an odd number of exponents, got {exponents}.")
        if any(a <= b for a, b in zip(exponents, exponents[1:])):
            raise ValueError(f"Exponents {exponents} are not strictly decreasing.")
        if any(a != -b for a, b in zip(exponents, reversed(exponents))):
            raise ValueError(f"Exponents {exponents} are not symmetric.")


@dataclass(frozen=True)
class MSequence:
    """The sequence ``m_0, ..., m_n`` attached to an ``AlexanderData``."""

    values: Tuple[int, ...]


def _multiply(first: Polynomial, second: Polynomial) -> Polynomial:
    result = [0] * (len(first) + len(second) - 1)
    for i, a in enumerate(first):
        for j, b in enumerate(second):
            result[i + j] += a * b
    return result


def _divide(numerator: Polynomial, denominator: Polynomial) -> Polynomial:
    """Exact division by a polynomial with leading coefficient 1."""
    remainder = list(numerator)
    quotient = [0] * (len(numerator) - len(denominator) + 1)
    for shift in range(len(quotient) - 1, -1, -1):
        coefficient = remainder[shift + len(denominator) - 1]
        quotient[shift] = coefficient
        for i, d in enumerate(denominator):
            remainder[shift + i] -= coefficient * d
    if any(remainder):
        raise NotDivisible(f"{numerator} is not divisible by {denominator}.")
    return quotient


def _binomial(degree: int) -> Polynomial:
    """``t^degree - 1``."""
    return [-1] + [0] * (degree - 1) + [1]


def torus_alexander(p: int, q: int) -> AlexanderData:
    """Alexander data of the torus knot ``T(p, q)``.

    ``Δ(t) = (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))``, symmetrized.

    Raises:
        NotCoprime: if ``gcd(p, q) != 1`` or a parameter is not positive
    """
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise NotCoprime(f"T({p}, {q}) is not a torus knot.")
    polynomial = _divide(
        _multiply(_binomial(p * q), _binomial(1)),
        _multiply(_binomial(p), _binomial(q)),
    )
    centre = (len(polynomial) - 1) // 2
    exponents = tuple(
        degree - centre
        for degree in range(len(polynomial) - 1, -1, -1)
        if polynomial[degree]
    )
    return AlexanderData(exponents)


def m_sequence(data: AlexanderData) -> MSequence:
    """``m_0 = 0``, ``m_2k = m_2k-1 - 1``, ``m_2k+1 = m_2k - 2(α_2k - α_2k+1) + 1``."""
    alpha = data.exponents
    values = [0]
    for k in range(1, len(alpha)):
        if k % 2 == 0:
            values.append(values[-1] - 1)
        else:
            values.append(values[-1] - 2 * (alpha[k - 1] - alpha[k]) + 1)
    return MSequence(tuple(values))


def upsilon_from_alexander(data: AlexanderData) -> int:
    """υ of an L-space knot with the given Alexander data."""
    m = m_sequence(data).values
    return max(m[k] - data.exponents[k] for k in range(0, len(m), 2))


def upsilon_torus(p: int, q: int) -> int:
    """υ of the torus knot ``T(p, q)``."""
    return upsilon_from_alexander(torus_alexander(p, q))


def upsilon_torus_3q(q: int) -> int:
    """υ of ``T(3, q)`` by the piecewise formula."""
    if q < 1 or gcd(3, q) != 1:
        raise NotCoprime(f"T(3, {q}) is not a torus knot.")
    if q % 3 == 1:
        return -2 * (q - 1) // 3
    return -2 * (q - 2) // 3 - 1


def upsilon_alternating(sigma: int) -> int:
    """υ of an alternating knot with signature ``sigma``."""
    if sigma % 2:
        raise OddSignature(f"Knot signatures are even, got {sigma}.")
    return sigma // 2


def torus_genus(p: int, q: int) -> int:
    """Slice genus ``(p - 1)(q - 1) / 2`` of ``T(p, q)``."""
    return (p - 1) * (q - 1) // 2


def slice_genus_bound_holds(upsilon: int, genus: int) -> bool:
    """Whether ``|υ| <= g``."""
    return abs(upsilon) <= genus
