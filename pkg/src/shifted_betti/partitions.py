"""Partitions of fixed length and the orders used on them.

Partitions are stored NON-DECREASING, ``(λ_1, ..., λ_n)`` with
``λ_1 <= ... <= λ_n``.  This is the opposite of the usual convention in
partition combinatorics, and every function here (and every input file)
expects it.  A partition is just a tuple of ints; :func:`as_partition`
validates one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import accumulate
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

from .errors import ValidationError

Partition = tuple[int, ...]


def binom(n: int, k: int) -> int:
    """Binomial coefficient that is 0 whenever an argument is out of range."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def as_partition(values: Iterable[int], n: int | None = None) -> Partition:
    lam = tuple(int(v) for v in values)
    if n is not None and len(lam) != n:
        raise ValidationError(f"partition {lam} has length {len(lam)}, expected {n}")
    for k, v in enumerate(lam):
        if v < 0:
            raise ValidationError(f"partition {lam}: negative entry at position {k + 1}")
        if k and lam[k - 1] > v:
            raise ValidationError(
                f"partition {lam} is not non-decreasing at position {k + 1} "
                f"({lam[k - 1]} > {v})"
            )
    return lam


def _check_lengths(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValidationError(f"length mismatch: {len(a)} != {len(b)}")


def part(a: Sequence[int]) -> Partition:
    """Sort an exponent vector into the partition of its monomial's orbit."""
    return tuple(sorted(a))


def partition_divides(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``x^mu`` divides ``x^lam``.

    For partitions this is also the orbit-level divisibility test: some
    permutation of ``mu`` divides some permutation of ``lam`` exactly when
    ``mu`` divides ``lam`` componentwise.
    """
    _check_lengths(mu, lam)
    return all(m <= l for m, l in zip(mu, lam))


def lex_less(a: Sequence[int], b: Sequence[int]) -> bool:
    """Degree first, then the leftmost nonzero entry of ``a - b`` is positive.

    This is the reverse of the familiar lexicographic tie-break, which is
    what makes it compatible with non-decreasing partitions.
    """
    _check_lengths(a, b)
    da, db = sum(a), sum(b)
    if da != db:
        return da < db
    for x, y in zip(a, b):
        if x != y:
            return x > y
    return False


def lex_key(a: Sequence[int]) -> tuple:
    """Sort key realising :func:`lex_less`."""
    return (sum(a),) + tuple(-x for x in a)


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Suffix-sum comparison; callers are responsible for equal degrees."""
    _check_lengths(mu, lam)
    s_mu = list(accumulate(reversed(mu)))
    s_lam = list(accumulate(reversed(lam)))
    return all(x <= y for x, y in zip(s_mu, s_lam))


@dataclass(frozen=True)
class PartitionStats:
    p: int
    r: int
    type_vector: tuple[int, ...]

    @property
    def middle(self) -> int:
        return sum(self.type_vector) - self.p - self.r


def type_vector(lam: Sequence[int]) -> tuple[int, ...]:
    if not lam:
        return ()
    top = max(lam)
    counts = Counter(lam)
    return tuple(counts.get(i, 0) for i in range(top + 1))


def stats(lam: Sequence[int]) -> PartitionStats:
    """``p`` = #{entries < λ_n - 1}, ``r`` = #{entries = λ_n}, and the type.

    The zero partition gets ``p = 0, r = n``.
    """
    top = lam[-1] if lam else 0
    p = sum(1 for v in lam if v < top - 1)
    r = sum(1 for v in lam if v == top)
    return PartitionStats(p, r, type_vector(lam))


def type_factorial(lam: Sequence[int]) -> int:
    return prod(factorial(t) for t in type_vector(lam))


def orbit_size(lam: Sequence[int]) -> int:
    """Number of distinct permutations of ``lam``: ``n! / type(lam)!``."""
    return factorial(len(lam)) // type_factorial(lam)


def partitions_of(d: int, n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All non-decreasing length-``n`` partitions of ``d`` with parts at
    most ``max_part``."""
    if max_part is None:
        max_part = d
    if n == 0:
        if d == 0:
            yield ()
        return
    # The last entry is the largest; it is at least ceil(d / n).
    lo = -(-d // n)
    for top in range(lo, min(d, max_part) + 1):
        for rest in partitions_of(d - top, n - 1, top):
            yield rest + (top,)


def partitions_up_to(max_degree: int, n: int) -> Iterator[Partition]:
    for d in range(max_degree + 1):
        yield from partitions_of(d, n)


def add_move(lam: Sequence[int], k: int, l: int) -> tuple[int, ...]:
    """Exponent vector ``lam + e_k - e_l`` (0-based indices), unsorted."""
    out = list(lam)
    out[k] += 1
    out[l] -= 1
    return tuple(out)


def fmt(vec: Sequence[int]) -> str:
    return "(" + ",".join(str(v) for v in vec) + ")"
