"""The subquotient modules N^λ and the closed Betti formula built from them.

For a shifted ideal with generators λ^(1) < ... < λ^(t) in lex order, the
successive quotients of the filtration by ideals generated by the first k
partitions are the modules N^λ, each with a linear resolution.  Summing
their Betti numbers gives the Betti table of the ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .betti import BettiTable
from .errors import DegenerateIdealError, ValidationError
from .ideal import SymmetricIdeal, require_shifted
from .partitions import Partition, as_partition, binom, lex_key, stats, type_factorial


@dataclass(frozen=True)
class NLambda:
    lam: Partition

    def __post_init__(self):
        if not self.lam or self.lam[-1] == 0:
            raise DegenerateIdealError("N^λ needs a nonzero partition")

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def p(self) -> int:
        return stats(self.lam).p

    @property
    def r(self) -> int:
        return stats(self.lam).r

    @property
    def degree(self) -> int:
        return sum(self.lam)

    @property
    def prefix_orbit(self) -> int:
        """``p! / type(λ_{<=p})!``, the size of the orbit of the prefix."""
        p = self.p
        return factorial(p) // type_factorial(self.lam[:p])


def nlambda_contains(N: NLambda, mu: Sequence[int]) -> bool:
    lam = N.lam
    mu = as_partition(mu)
    if len(mu) != len(lam):
        raise ValidationError(f"length mismatch: {len(mu)} != {len(lam)}")
    n, p, r, top = N.n, N.p, N.r, lam[-1]
    if mu[:p] != lam[:p]:
        return False
    if p < n and mu[p] < top - 1:
        return False
    return mu[n - r] >= top


def nlambda_betti_term(N: NLambda, k: int, l: int) -> int:
    """One summand of ``beta_{k+l}(N^λ)``: ``k`` indexes the squarefree
    Veronese factor on the last ``n - p`` variables, ``l`` the Koszul
    factor on the first ``p``."""
    n, p, r = N.n, N.p, N.r
    return (
        N.prefix_orbit
        * binom(n, p)
        * binom(n - p, r + k)
        * binom(r + k - 1, k)
        * binom(p, l)
    )


def nlambda_betti(N: NLambda, i: int) -> int:
    return sum(nlambda_betti_term(N, k, i - k) for k in range(i + 1))


def filtration(ideal: SymmetricIdeal) -> list[Partition]:
    require_shifted(ideal)
    return sorted(ideal.generators, key=lex_key)


def betti_closed_form(ideal: SymmetricIdeal) -> BettiTable:
    entries = []
    for lam in filtration(ideal):
        N = NLambda(lam)
        d = N.degree
        for i in range(N.n):
            entries.append(((i, i + d), nlambda_betti(N, i)))
    return BettiTable(entries)
