"""Symbolic powers of monomial star configurations.

``I_{n,c}`` is the intersection of all coordinate primes generated by ``c``
variables (equivalently, the squarefree monomials of degree ``n - c + 1``),
and ``I_{n,c}^{(m)}`` intersects their m-th powers.  Its partition
generators are the partitions of ``m`` into at most ``c`` parts, written
with length ``c`` and padded on the right by repeating the last part.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiTable
from .errors import PreconditionError, ValidationError
from .ideal import SymmetricIdeal, normalize
from .partitions import binom, partitions_of


@dataclass(frozen=True)
class StarParams:
    n: int
    c: int
    m: int

    def __post_init__(self):
        if not 1 <= self.c <= self.n:
            raise ValidationError(f"need 1 <= c <= n, got c={self.c}, n={self.n}")
        if self.m < 1:
            raise ValidationError(f"need m >= 1, got m={self.m}")


def star_partitions(params: StarParams) -> list[tuple[int, ...]]:
    n, c, m = params.n, params.c, params.m
    return [head + (head[-1],) * (n - c) for head in partitions_of(m, c)]


def star_ideal(params: StarParams) -> SymmetricIdeal:
    return normalize(params.n, star_partitions(params))


def star_strand_degrees(params: StarParams) -> set[int]:
    n, c, m = params.n, params.c, params.m
    return {m + k * (n - c) for k in range(1, m + 1)}


def star_regularity(params: StarParams) -> int:
    return params.m * (1 + params.n - params.c)


def star_bottom_row(params: StarParams, i: int) -> int:
    """``beta_{i, i + m(1+n-c)}`` for ``m >= 2``."""
    if params.m < 2:
        raise PreconditionError("the bottom-row formula needs m >= 2")
    n, c = params.n, params.c
    return binom(n, c - 1) * binom(c - 1, i)


def star_top_row(params: StarParams, i: int) -> int:
    """``beta_{i, i + m + n - c}`` for ``m <= c``."""
    n, c, m = params.n, params.c, params.m
    if m > c:
        raise PreconditionError("the top-row formula needs m <= c")
    return binom(n, c - m - i) * binom(m + n - c + i - 1, i)


def star_betti_m2(params: StarParams, i: int, j: int) -> int:
    """``beta_{i, i+j}`` of the symbolic square, ``c >= 2``.

    For ``c = n`` both strands sit in degree 2 and their cases add up.
    """
    n, c = params.n, params.c
    if c < 2:
        raise PreconditionError("the symbolic-square formula needs c >= 2")
    total = 0
    if j == n - c + 2:
        total += binom(n, c - 2 - i) * binom(n - c + 1 + i, i)
    if j == 2 * (n - c + 1):
        total += binom(n, c - 1) * binom(c - 1, i)
    return total


def star_betti_m3(params: StarParams, i: int, j: int) -> int:
    """``beta_{i, i+j}`` of the symbolic cube, ``c >= 3``.

    For ``c = n`` all three strands sit in degree 3 and their cases add up.
    """
    n, c = params.n, params.c
    if c < 3:
        raise PreconditionError("the symbolic-cube formula needs c >= 3")
    total = 0
    if j == n - c + 3:
        total += binom(n, c - 3 - i) * binom(n - c + 2 + i, i)
    if j == 2 * (n - c + 1) + 1:
        total += binom(n, c - 2) * (binom(c - 2, i) + (n - c + 1) * binom(c - 1, i))
    if j == 3 * (n - c + 1):
        total += binom(n, c - 1) * binom(c - 1, i)
    return total


def third_symbolic_defect(n: int, c: int) -> int:
    return binom(n, c - 2) * (n - c + 2)


def star_betti_low_power_table(params: StarParams) -> BettiTable | None:
    """Betti table from the closed symbolic square/cube formulas, or ``None``
    when no such formula covers ``(c, m)``."""
    if params.m == 2 and params.c >= 2:
        formula = star_betti_m2
    elif params.m == 3 and params.c >= 3:
        formula = star_betti_m3
    else:
        return None
    entries = []
    for j in star_strand_degrees(params):
        for i in range(params.n):
            entries.append(((i, i + j), formula(params, i, j)))
    return BettiTable(entries)
