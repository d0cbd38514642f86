"""Equivariant Betti numbers, tracked as module descriptors with dimensions.

Each summand of ``Tor_i(N^λ)`` is an induced module
``Ind_{S_p x S_{n-p}}^{S_n}( M(x^{λ_{<=p}}) ⊗ U_p^{(1^k)} ) ⊠ U_{n-p}^{(1^l, r)}``
with ``k + l = i``.  Only dimensions are computed; no characters or
irreducible decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiTable
from .errors import ValidationError
from .ideal import SymmetricIdeal
from .nlambda import NLambda, filtration
from .partitions import Partition, binom, fmt


def hook_specht_dim(i: int, r: int) -> int:
    """Dimension of the Specht module of the hook with one row of length
    ``r`` and ``i`` further boxes in the first column."""
    if r < 1 or i < 0:
        raise ValidationError(f"hook (1^{i},{r}) needs r >= 1 and i >= 0")
    return binom(r + i - 1, i)


def u_module_dim(l: int, i: int, r: int) -> int:
    """``dim U_l^{(1^i, r)} = C(l, i + r) * dim S^{(1^i, r)}``."""
    if i + r > l:
        raise ValidationError(f"shape (1^{i},{r}) has {i + r} boxes, more than l={l}")
    return binom(l, i + r) * hook_specht_dim(i, r)


def column_module_dim(p: int, k: int) -> int:
    """``dim U_p^{(1^k)}``; ``k = 0`` is the trivial module."""
    if k > p or k < 0:
        raise ValidationError(f"column (1^{k}) does not fit in S_{p}")
    return binom(p, k)


def _shape(l: int, r: int) -> str:
    return f"(1^{l},{r})" if l else f"({r})"


@dataclass(frozen=True)
class SummandDescriptor:
    n: int
    p: int
    lambda_prefix: Partition
    k: int
    l: int
    r: int
    dimension: int

    @property
    def i(self) -> int:
        return self.k + self.l

    def render(self) -> str:
        right = f"U_{self.n - self.p}^{_shape(self.l, self.r)}"
        if self.p == 0:
            return right
        col = f"(1^{self.k})" if self.k else "()"
        left = f"M{fmt(self.lambda_prefix)} (x) U_{self.p}^{col}"
        return f"Ind[S{self.p}xS{self.n - self.p}->S{self.n}]( {left} ) [x] {right}"


def tor_summands(lam: Partition, i: int) -> list[SummandDescriptor]:
    N = NLambda(tuple(lam))
    n, p, r = N.n, N.p, N.r
    out = []
    for k in range(min(i, p) + 1):
        l = i - k
        if l + r > n - p:
            continue
        dim = (
            binom(n, p)
            * N.prefix_orbit
            * column_module_dim(p, k)
            * u_module_dim(n - p, l, r)
        )
        if dim:
            out.append(SummandDescriptor(n, p, N.lam[:p], k, l, r, dim))
    return out


def equivariant_table(ideal: SymmetricIdeal) -> dict[tuple[int, int], list[SummandDescriptor]]:
    """``(i, d) -> summands`` of ``Tor_i(I)_{i+d}``, one block per generator."""
    table: dict[tuple[int, int], list[SummandDescriptor]] = {}
    for lam in filtration(ideal):
        d = sum(lam)
        for i in range(len(lam)):
            summands = tor_summands(lam, i)
            if summands:
                table.setdefault((i, d), []).extend(summands)
    return dict(sorted(table.items(), key=lambda kv: (kv[0][1], kv[0][0])))


def dimension_table(table: dict[tuple[int, int], list[SummandDescriptor]]) -> BettiTable:
    return BettiTable(((i, i + d), sum(s.dimension for s in ss)) for (i, d), ss in table.items())


def render_equivariant_table(table: dict[tuple[int, int], list[SummandDescriptor]]) -> str:
    lines = []
    for (i, d), summands in table.items():
        total = sum(s.dimension for s in summands)
        lines.append(f"row {d}, column {i}: dim {total}")
        for s in summands:
            lines.append(f"    {s.render()}    [dim {s.dimension}]")
    return "\n".join(lines)
