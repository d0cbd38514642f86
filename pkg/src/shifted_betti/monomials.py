"""Monomials as exponent vectors: orbits, membership, colon ideals, and the
total order used to list generators."""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

from .errors import ValidationError
from .partitions import lex_key, lex_less, part, partition_divides

Monomial = tuple[int, ...]


def as_monomial(values: Iterable[int], n: int | None = None) -> Monomial:
    a = tuple(int(v) for v in values)
    if n is not None and len(a) != n:
        raise ValidationError(f"monomial {a} has length {len(a)}, expected {n}")
    if any(v < 0 for v in a):
        raise ValidationError(f"monomial {a} has a negative exponent")
    return a


def divides(v: Sequence[int], u: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(v, u))


def degree(u: Sequence[int]) -> int:
    return sum(u)


def orbit(lam: Sequence[int]) -> list[Monomial]:
    """Distinct permutations of ``lam``, sorted for determinism."""
    return sorted(_distinct_permutations(tuple(lam)))


def _distinct_permutations(lam: Monomial) -> set[Monomial]:
    if len(set(lam)) == len(lam):
        return set(permutations(lam))
    # Place each distinct value recursively to avoid n! blowup on repeats.
    out: set[Monomial] = set()
    values = sorted(set(lam))

    def place(prefix: list[int], remaining: dict[int, int], left: int) -> None:
        if left == 0:
            out.add(tuple(prefix))
            return
        for v in values:
            if remaining[v]:
                remaining[v] -= 1
                prefix.append(v)
                place(prefix, remaining, left - 1)
                prefix.pop()
                remaining[v] += 1

    counts = {v: lam.count(v) for v in values}
    place([], counts, len(lam))
    return out


def ideal_contains(partitions: Iterable[Sequence[int]], u: Sequence[int]) -> bool:
    """Membership of ``x^u`` in the S_n-fixed ideal with the given partition
    generators."""
    key = part(u)
    return any(partition_divides(lam, key) for lam in partitions)


def monomial_ideal_contains(gens: Iterable[Sequence[int]], u: Sequence[int]) -> bool:
    return any(divides(g, u) for g in gens)


def minimalize(monomials: Iterable[Sequence[int]]) -> list[Monomial]:
    """Divisibility-minimal elements, deduplicated and sorted."""
    items = sorted(set(tuple(m) for m in monomials), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for m in items:
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return sorted(kept)


def colon_by_monomial(gens: Iterable[Sequence[int]], u: Sequence[int]) -> list[Monomial]:
    """Minimal generators of ``(gens) : x^u``: the minimal ``v - min(v, u)``."""
    return minimalize(tuple(max(a - b, 0) for a, b in zip(v, u)) for v in gens)


def precedes(v: Sequence[int], u: Sequence[int]) -> bool:
    """Strict total order on monomials: compare partitions by
    :func:`lex_less`, break ties by :func:`lex_less` on the exponents."""
    if len(v) != len(u):
        raise ValidationError(f"length mismatch: {len(v)} != {len(u)}")
    if tuple(v) == tuple(u):
        raise ValidationError("precedes is strict; got equal monomials")
    pv, pu = part(v), part(u)
    if pv != pu:
        return lex_less(pv, pu)
    return lex_less(v, u)


def precedes_key(u: Sequence[int]) -> tuple:
    return lex_key(part(u)) + lex_key(u)


def to_string(u: Sequence[int]) -> str:
    """``x1^2 x2 x4^3`` style; ``1`` for the unit monomial."""
    factors = []
    for i, a in enumerate(u, start=1):
        if a == 1:
            factors.append(f"x{i}")
        elif a > 1:
            factors.append(f"x{i}^{a}")
    return " ".join(factors) if factors else "1"
