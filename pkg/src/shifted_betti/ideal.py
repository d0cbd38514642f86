"""S_n-fixed monomial ideals described by their partition generators."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .errors import DegenerateIdealError, NotShiftedError, ValidationError
from .monomials import Monomial, orbit, precedes_key
from .partitions import (
    Partition,
    add_move,
    as_partition,
    fmt,
    lex_key,
    part,
    partition_divides,
    stats,
)


@dataclass(frozen=True)
class SymmetricIdeal:
    """An S_n-fixed monomial ideal of ``k[x_1..x_n]``.

    ``generators`` is the antichain of partition generators, kept sorted in
    increasing lex order.  Build instances with :func:`normalize`.
    """

    n: int
    generators: tuple[Partition, ...]

    @classmethod
    def from_partitions(cls, n: int, partitions: Iterable[Sequence[int]]) -> "SymmetricIdeal":
        return normalize(n, partitions)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(sum(lam) == 0 for lam in self.generators)

    def contains_partition(self, mu: Sequence[int]) -> bool:
        return any(partition_divides(lam, mu) for lam in self.generators)

    def contains(self, u: Sequence[int]) -> bool:
        if len(u) != self.n:
            raise ValidationError(f"monomial {tuple(u)} has length {len(u)}, expected {self.n}")
        return self.contains_partition(part(u))

    __contains__ = contains

    @cached_property
    def monomial_generators(self) -> tuple[Monomial, ...]:
        """G(I), sorted by the generator order (partition lex, then exponent lex)."""
        gens = [u for lam in self.generators for u in orbit(lam)]
        return tuple(sorted(gens, key=precedes_key))

    @property
    def max_degree(self) -> int:
        return max((sum(lam) for lam in self.generators), default=0)

    def __str__(self) -> str:
        return f"n={self.n} Λ={{" + ", ".join(fmt(lam) for lam in self.generators) + "}"


def normalize(n: int, raw: Iterable[Sequence[int]]) -> SymmetricIdeal:
    """Drop every partition divisible by another one in ``raw``."""
    parts = {as_partition(lam, n) for lam in raw}
    minimal = [
        lam for lam in parts
        if not any(mu != lam and partition_divides(mu, lam) for mu in parts)
    ]
    return SymmetricIdeal(n, tuple(sorted(minimal, key=lex_key)))


def _require_proper(ideal: SymmetricIdeal) -> None:
    if ideal.is_zero:
        raise DegenerateIdealError("the zero ideal has no partition generators")
    if ideal.is_unit:
        raise DegenerateIdealError("the unit ideal is excluded from shiftedness checks")


@dataclass(frozen=True)
class ShiftViolation:
    """Generator ``generator`` moved by ``x_k / x_l`` (1-based) leaves the ideal."""

    generator: Partition
    k: int
    l: int
    moved: Partition

    def describe(self) -> str:
        return f"{fmt(self.generator)} → {fmt(self.moved)}"


def _moves(lam: Partition, strong: bool) -> Iterator[tuple[int, int]]:
    n = len(lam)
    targets = range(n) if strong else (n - 1,)
    for k in range(n):
        for l in targets:
            if k < l and lam[k] < lam[l]:
                yield k, l


def find_shift_violation(ideal: SymmetricIdeal, strong: bool = False) -> ShiftViolation | None:
    """First generator-level failure of the (strongly) shifted condition.

    Only the partition generators need checking: the condition on all of
    P(I) follows from the condition on generators.
    """
    _require_proper(ideal)
    for lam in ideal.generators:
        for k, l in _moves(lam, strong):
            moved = part(add_move(lam, k, l))
            if not ideal.contains_partition(moved):
                return ShiftViolation(lam, k + 1, l + 1, moved)
    return None


def is_shifted(ideal: SymmetricIdeal) -> bool:
    return find_shift_violation(ideal) is None


def is_strongly_shifted(ideal: SymmetricIdeal) -> bool:
    return find_shift_violation(ideal, strong=True) is None


def require_shifted(ideal: SymmetricIdeal) -> None:
    violation = find_shift_violation(ideal)
    if violation is not None:
        raise NotShiftedError(
            "ideal is not shifted: generator-level condition fails for "
            f"x^λ·x_{violation.k}/x_{violation.l}, {violation.describe()} is not in the ideal",
            generator=violation.generator,
            moved=violation.moved,
        )


def locate_generator(ideal: SymmetricIdeal, mu: Sequence[int]) -> Partition:
    """The unique generator λ dividing ``mu`` with ``λ_{<=p(λ)} = mu_{<=p(λ)}``.

    Shifted ideals always have exactly one such generator (it is the
    lex-smallest divisor of ``mu``).  For other ideals every candidate is
    checked, and :class:`NotShiftedError` is raised unless exactly one exists.
    """
    mu = as_partition(mu, ideal.n)
    _require_proper(ideal)
    divisors = [lam for lam in ideal.generators if partition_divides(lam, mu)]
    if not divisors:
        raise ValidationError(f"{fmt(mu)} is not in the ideal")
    matches = [lam for lam in divisors if lam[:stats(lam).p] == mu[:stats(lam).p]]
    if len(matches) != 1:
        found = ", ".join(fmt(lam) for lam in matches) or "none"
        raise NotShiftedError(
            f"no unique generator for {fmt(mu)} (candidates: {found}); "
            "uniqueness holds for shifted ideals",
            moved=mu,
        )
    return matches[0]


# -- weakly polymatroidal -------------------------------------------------


@dataclass(frozen=True)
class PolymatroidalCheck:
    ok: bool
    u: Monomial | None = None
    v: Monomial | None = None
    t: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _exchange_exists(ideal: SymmetricIdeal, v: Sequence[int], t: int) -> bool:
    # t is 0-based; v * x_t / x_j must be a monomial in I for some j > t
    for j in range(t + 1, len(v)):
        if v[j] > 0 and ideal.contains_partition(part(add_move(v, t, j))):
            return True
    return False


def polymatroidal_violation(ideal: SymmetricIdeal, u: Sequence[int], v: Sequence[int]) -> int | None:
    """Return the 1-based index ``t`` if the pair (u, v) breaks the exchange
    condition, else ``None``.  Both monomials must lie in the ideal."""
    if not (ideal.contains(u) and ideal.contains(v)):
        raise ValidationError("both monomials must belong to the ideal")
    for t, (a, b) in enumerate(zip(u, v)):
        if a != b:
            if a > b and not _exchange_exists(ideal, v, t):
                return t + 1
            return None
    return None


def _compositions(d: int, n: int) -> Iterator[Monomial]:
    for bars in combinations_with_replacement(range(d + 1), n - 1):
        edges = (0,) + bars + (d,)
        yield tuple(edges[i + 1] - edges[i] for i in range(n))


def _members_up_to(ideal: SymmetricIdeal, bound: int) -> Iterator[Monomial]:
    lo = min(sum(lam) for lam in ideal.generators)
    for d in range(lo, bound + 1):
        for u in sorted(_compositions(d, ideal.n), key=precedes_key):
            if ideal.contains_partition(part(u)):
                yield u


def _window_partner(ideal: SymmetricIdeal, v: Monomial, t: int, bound: int) -> Monomial | None:
    """Some u in the ideal with deg u <= bound, u agreeing with v before t
    and exceeding it at t."""
    if sum(v) < bound:
        return v[:t] + (v[t] + 1,) + v[t + 1:]
    # deg v == bound: only maximal candidates matter since I is an ideal
    room = sum(v[t:]) - v[t] - 1
    if room < 0:
        return None
    tail_len = len(v) - t - 1
    for s in range(room + 1):
        for tail in (_compositions(s, tail_len) if tail_len else [()]):
            u = v[:t] + (v[t] + 1 + room - s,) + tail
            if ideal.contains_partition(part(u)):
                return u
    return None


def is_weakly_polymatroidal(
    ideal: SymmetricIdeal,
    degree_bound: int | None = None,
    extended: bool = False,
) -> PolymatroidalCheck:
    """Check the weakly polymatroidal exchange condition.

    By default the pairs range over G(I).  With ``extended=True`` they range
    over every monomial of I of degree at most ``degree_bound`` (default:
    largest generator degree plus n).  Note the extended condition fails for
    any nonzero S_n-fixed ideal in n >= 2 variables once the window is big
    enough, because a member with ``b_j = 0`` for all ``j > t`` has no
    admissible exchange.
    """
    if ideal.is_zero:
        return PolymatroidalCheck(True)
    if not extended:
        gens = ideal.monomial_generators
        for v in gens:
            for u in gens:
                t = polymatroidal_violation(ideal, u, v)
                if t is not None:
                    return PolymatroidalCheck(False, u, v, t)
        return PolymatroidalCheck(True)

    bound = ideal.max_degree + ideal.n if degree_bound is None else degree_bound
    for v in _members_up_to(ideal, bound):
        for t in range(ideal.n):
            if _exchange_exists(ideal, v, t):
                continue
            u = _window_partner(ideal, v, t, bound)
            if u is not None:
                return PolymatroidalCheck(False, u, v, t + 1)
    return PolymatroidalCheck(True)
