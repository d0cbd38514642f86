"""Linear quotients of shifted ideals and the Betti numbers they give.

Listing G(I) in the generator order, the colon of the earlier generators by
``u`` is generated by the variables in ``C(u)``: every position whose
exponent is below ``max - 1``, plus the positions with exponent exactly
``max - 1`` that come before the last position attaining the max.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .betti import BettiTable
from .errors import DegenerateIdealError
from .ideal import SymmetricIdeal, require_shifted
from .monomials import Monomial, colon_by_monomial
from .partitions import binom


@dataclass(frozen=True)
class QuotientRecord:
    u: Monomial
    colon_vars: frozenset[int]  # 1-based variable indices
    max_u: int
    position: int | None = None

    def colon_generators(self) -> list[Monomial]:
        n = len(self.u)
        return sorted(tuple(int(k == i) for k in range(1, n + 1)) for i in self.colon_vars)


def generator_order(ideal: SymmetricIdeal) -> list[Monomial]:
    if ideal.is_zero:
        raise DegenerateIdealError("the zero ideal has no generators")
    return list(ideal.monomial_generators)


def quotient_record(u: Sequence[int], position: int | None = None) -> QuotientRecord:
    u = tuple(u)
    top = max(u)
    if top == 0:
        raise DegenerateIdealError("quotient_record needs a nonconstant monomial")
    max_u = max(i for i, a in enumerate(u, start=1) if a == top)
    colon = frozenset(
        i for i, a in enumerate(u, start=1)
        if a < top - 1 or (a == top - 1 and i < max_u)
    )
    return QuotientRecord(u, colon, max_u, position)


def quotient_records(ideal: SymmetricIdeal) -> list[QuotientRecord]:
    require_shifted(ideal)
    return [quotient_record(u, k) for k, u in enumerate(generator_order(ideal), start=1)]


class LinearQuotientCheck(NamedTuple):
    ok: bool
    failed_at: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_linear_quotients(ideal: SymmetricIdeal) -> LinearQuotientCheck:
    """Compare the predicted colon variables with the colon ideal computed
    directly at every position of the generator order (1-based)."""
    require_shifted(ideal)
    gens = generator_order(ideal)
    for k in range(1, len(gens)):
        rec = quotient_record(gens[k])
        direct = colon_by_monomial(gens[:k], gens[k])
        if direct != rec.colon_generators():
            return LinearQuotientCheck(False, k + 1)
    return LinearQuotientCheck(True)


def betti_from_quotients(ideal: SymmetricIdeal) -> BettiTable:
    """``beta_{i,i+j} = sum over generators u of degree j of C(|C(u)|, i)``."""
    require_shifted(ideal)
    entries = []
    for u in generator_order(ideal):
        c = len(quotient_record(u).colon_vars)
        j = sum(u)
        entries.extend(((i, i + j), binom(c, i)) for i in range(c + 1))
    return BettiTable(entries)
