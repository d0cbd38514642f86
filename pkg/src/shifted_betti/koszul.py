"""Brute-force multigraded Betti numbers of monomial ideals.

``beta_{i,a}(I) = dim H~_{i-1}(K^a(I))`` where the upper Koszul complex
``K^a(I)`` has a face ``F`` whenever ``x^{a - F}`` lies in ``I``.  Summing
over all multidegrees in the bounding box of the generators gives the
graded Betti numbers.  Nothing here relies on shiftedness, so it serves as
an independent check on the closed formulas.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from math import prod
from typing import Iterable, Sequence

from .betti import BettiTable
from .errors import DegenerateIdealError, SizeGuardError, ValidationError
from .ideal import SymmetricIdeal
from .monomials import Monomial, divides, minimalize

DEFAULT_MAX_BOX = 10**6
PARALLEL_THRESHOLD = 20_000


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces are sorted tuples of 1-based vertices; the empty face is ``()``."""

    vertex_count: int
    faces: frozenset[tuple[int, ...]]

    @classmethod
    def from_facets(cls, vertex_count: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        faces = set()
        for facet in facets:
            facet = tuple(sorted(facet))
            for size in range(len(facet) + 1):
                faces.update(combinations(facet, size))
        return cls(vertex_count, frozenset(faces))

    def is_closed(self) -> bool:
        return all(
            face[:j] + face[j + 1:] in self.faces
            for face in self.faces
            for j in range(len(face))
        )

    def masks(self) -> list[int]:
        return [sum(1 << (v - 1) for v in face) for face in self.faces]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def _rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            col = max(row)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(row[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in row.items()}
                break
            factor = row[col]
            for c, v in piv.items():
                nv = (row.get(c, 0) - factor * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def _boundary_rank(upper: list[int], lower: list[int], char: int) -> int:
    """Rank of the boundary map from faces ``upper`` to faces ``lower``,
    both given as vertex bitmasks."""
    if not upper or not lower:
        return 0
    index = {mask: k for k, mask in enumerate(lower)}
    if char == 2:
        rows = []
        for mask in upper:
            row = 0
            m = mask
            while m:
                bit = m & -m
                row |= 1 << index[mask ^ bit]
                m ^= bit
            rows.append(row)
        return _rank_gf2(rows)
    rows = []
    for mask in upper:
        row = {}
        sign = 1
        m = mask
        while m:
            bit = m & -m
            row[index[mask ^ bit]] = sign
            sign = -sign
            m ^= bit
        rows.append(row)
    return _rank_mod_p(rows, char)


def _homology_from_masks(masks: Iterable[int], n: int, char: int) -> list[int]:
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in masks:
        by_size[bin(mask).count("1")].append(mask)
    # by_size[s] holds faces of dimension s - 1; d_s maps size s to size s-1
    ranks = [0] * (n + 2)
    for s in range(1, n + 1):
        ranks[s] = _boundary_rank(by_size[s], by_size[s - 1], char)
    return [len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(n + 1)]


def reduced_homology_dims(K: SimplicialComplex, char: int = 2) -> list[int]:
    """``[dim H~_{-1}, dim H~_0, ..., dim H~_{n-1}]`` over GF(char)."""
    if not is_prime(char):
        raise ValidationError(f"characteristic {char} is not prime")
    return _homology_from_masks(K.masks(), K.vertex_count, char)


def upper_koszul(gens: Iterable[Sequence[int]], a: Sequence[int]) -> SimplicialComplex:
    gens = [tuple(g) for g in gens]
    n = len(a)
    support = [i for i in range(n) if a[i] > 0]
    faces = set()
    for size in range(len(support) + 1):
        for face in combinations(support, size):
            b = list(a)
            for i in face:
                b[i] -= 1
            if any(divides(g, b) for g in gens):
                faces.add(tuple(i + 1 for i in face))
    return SimplicialComplex(n, frozenset(faces))


def _worker_count() -> int:
    raw = os.environ.get("SHIFTED_BETTI_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        value = 0
    return value if value > 0 else (os.cpu_count() or 1)


def _as_generators(source) -> list[Monomial]:
    if isinstance(source, SymmetricIdeal):
        if source.is_zero:
            raise DegenerateIdealError("the zero ideal has no Betti numbers to compute")
        return list(source.monomial_generators)
    raw = [tuple(g) for g in source]
    if not raw:
        raise DegenerateIdealError("the zero ideal has no Betti numbers to compute")
    if len({len(g) for g in raw}) != 1:
        raise ValidationError("generators have different lengths")
    return minimalize(raw)


def _multidegree_betti(a, n, char, member, gens=None) -> list[tuple[int, int]]:
    support = [i for i in range(n) if a[i]]
    if gens is not None:
        # a must be the lcm of the generators dividing it, else K^a is a cone
        below = [g for g in gens if divides(g, a)]
        if any(a[i] != max(g[i] for g in below) for i in support):
            return []
    masks = []
    for size in range(len(support) + 1):
        for face in combinations(support, size):
            b = list(a)
            for i in face:
                b[i] -= 1
            if member(tuple(b)):
                masks.append(sum(1 << i for i in face))
    dims = _homology_from_masks(masks, n, char)
    # dims[s] is H~ in dimension s - 1, which contributes to beta_s
    return [(s, h) for s, h in enumerate(dims) if h]


def _chunk_job(args):
    chunk, gens, n, char, prune = args
    genset = [tuple(g) for g in gens]
    cache: dict[tuple, bool] = {}

    def member(b):
        hit = cache.get(b)
        if hit is None:
            hit = cache[b] = any(divides(g, b) for g in genset)
        return hit

    out = []
    for a in chunk:
        if not member(a):
            continue
        for i, h in _multidegree_betti(a, n, char, member, genset if prune else None):
            out.append(((i, sum(a)), h))
    return out


def betti_oracle(
    source,
    char: int = 2,
    max_box: int = DEFAULT_MAX_BOX,
    prune_cones: bool = False,
) -> BettiTable:
    """Graded Betti numbers of ``source`` (a :class:`SymmetricIdeal` or an
    iterable of exponent vectors) by reduced homology of upper Koszul
    complexes over GF(char).

    ``prune_cones`` skips multidegrees that are not lcms of generators,
    whose complexes are cones and contribute nothing.
    """
    if not is_prime(char):
        raise ValidationError(f"characteristic {char} is not prime")
    gens = _as_generators(source)
    n = len(gens[0])
    box = [max(g[i] for g in gens) for i in range(n)]
    size = prod(b + 1 for b in box)
    if size > max_box:
        raise SizeGuardError(
            f"bounding box has {size} multidegrees (limit {max_box}); "
            "shrink the parameters or raise max_box"
        )
    points = list(product(*(range(b + 1) for b in box)))

    workers = _worker_count()
    if workers > 1 and size >= PARALLEL_THRESHOLD:
        step = -(-len(points) // (workers * 4))
        jobs = [(points[s:s + step], gens, n, char, prune_cones) for s in range(0, len(points), step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chunk_job, jobs))
        return BettiTable([entry for chunk in results for entry in chunk])

    # Points come in lexicographic order, so a - e_i is always seen before a.
    genset = set(gens)
    member: dict[tuple, bool] = {}
    for a in points:
        inside = a in genset
        if not inside:
            for i in range(n):
                if a[i] and member[a[:i] + (a[i] - 1,) + a[i + 1:]]:
                    inside = True
                    break
        member[a] = inside

    entries = []
    for a in points:
        if not member[a]:
            continue
        for i, h in _multidegree_betti(a, n, char, member.__getitem__, gens if prune_cones else None):
            entries.append(((i, sum(a)), h))
    return BettiTable(entries)
