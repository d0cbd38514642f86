"""Shared fixtures data and brute-force helpers for the test suite."""

import random
import re
from itertools import permutations, product

from shifted_betti.ideal import normalize
from shifted_betti.partitions import dominance_leq, partitions_of, stats

THREE_VARS = (3, [(1, 1, 1), (0, 1, 2), (0, 0, 4)])
FOUR_VARS = (4, [(1, 1, 2, 2), (0, 2, 2, 2), (0, 1, 2, 3)])

# Reference linear quotients of the n=4 example: u_i, colon variables, max(u_i).
QUOTIENT_TABLE = """
x1^2 x2^2 x3 x4 | - | 2
x1^2 x2 x3^2 x4 | x2 | 3
x1^2 x2 x3 x4^2 | x2,x3 | 4
x1 x2^2 x3^2 x4 | x1 | 3
x1 x2^2 x3 x4^2 | x1,x3 | 4
x1 x2 x3^2 x4^2 | x1,x2 | 4
x1^2 x2^2 x3^2 | x4 | 3
x1^2 x2^2 x4^2 | x3 | 4
x1^2 x3^2 x4^2 | x2 | 4
x2^2 x3^2 x4^2 | x1 | 4
x1^3 x2^2 x3 | x3,x4 | 1
x1^3 x2^2 x4 | x3,x4 | 1
x1^3 x2 x3^2 | x2,x4 | 1
x1^3 x2 x4^2 | x2,x3 | 1
x1^3 x3^2 x4 | x2,x4 | 1
x1^3 x3 x4^2 | x2,x3 | 1
x1^2 x2^3 x3 | x1,x3,x4 | 2
x1^2 x2^3 x4 | x1,x3,x4 | 2
x1^2 x2 x3^3 | x1,x2,x4 | 3
x1^2 x2 x4^3 | x1,x2,x3 | 4
x1^2 x3^3 x4 | x1,x2,x4 | 3
x1^2 x3 x4^3 | x1,x2,x3 | 4
x1 x2^3 x3^2 | x1,x4 | 2
x1 x2^3 x4^2 | x1,x3 | 2
x1 x2^2 x3^3 | x1,x2,x4 | 3
x1 x2^2 x4^3 | x1,x2,x3 | 4
x1 x3^3 x4^2 | x1,x2 | 3
x1 x3^2 x4^3 | x1,x2,x3 | 4
x2^3 x3^2 x4 | x1,x4 | 2
x2^3 x3 x4^2 | x1,x3 | 2
x2^2 x3^3 x4 | x1,x2,x4 | 3
x2^2 x3 x4^3 | x1,x2,x3 | 4
x2 x3^3 x4^2 | x1,x2 | 3
x2 x3^2 x4^3 | x1,x2,x3 | 4
"""


def parse_monomial(text, n):
    exps = [0] * n
    for factor in text.split():
        m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
        exps[int(m.group(1)) - 1] = int(m.group(2) or 1)
    return tuple(exps)


def quotient_table_rows():
    rows = []
    for line in QUOTIENT_TABLE.strip().splitlines():
        mono, colon, mx = (s.strip() for s in line.split("|"))
        vars_ = set() if colon == "-" else {int(v[1:]) for v in colon.split(",")}
        rows.append((parse_monomial(mono, 4), vars_, int(mx)))
    return rows


def brute_orbit(lam):
    return set(permutations(lam))


def brute_contains(partitions, u):
    """Some permutation of some generator divides u."""
    return any(
        all(a <= b for a, b in zip(w, u))
        for lam in partitions
        for w in brute_orbit(lam)
    )


def monomials_up_to(n, max_exp):
    return product(range(max_exp + 1), repeat=n)


def dominance_saturation(n, seeds):
    """All partitions dominated by a seed of the same degree."""
    out = set()
    for lam in seeds:
        for mu in partitions_of(sum(lam), n):
            if dominance_leq(mu, lam):
                out.add(mu)
    return out


def random_partition(rng, n, max_degree):
    d = rng.randint(1, max_degree)
    return rng.choice(list(partitions_of(d, n)))


def random_shifted_ideals(count, seed=2019, max_n=4, max_degree=4, min_n=1):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        seeds = [random_partition(rng, n, max_degree) for _ in range(rng.randint(1, 3))]
        out.append(normalize(n, dominance_saturation(n, seeds)))
    return out


def random_symmetric_ideals(count, seed=7, max_n=4, max_degree=4):
    """Arbitrary S_n-fixed ideals (not necessarily shifted)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        seeds = [random_partition(rng, n, max_degree) for _ in range(rng.randint(1, 4))]
        out.append(normalize(n, seeds))
    return out


def window(ideal, extra=2):
    """Partitions in P(I) of degree at most the largest generator degree + extra."""
    for d in range(ideal.max_degree + extra + 1):
        for mu in partitions_of(d, ideal.n):
            if ideal.contains_partition(mu):
                yield mu


def strongly_shifted_by_dominance(ideal, extra=2):
    """P(I) is closed under going down in dominance order, within a window."""
    for lam in window(ideal, extra):
        for mu in partitions_of(sum(lam), ideal.n):
            if dominance_leq(mu, lam) and not ideal.contains_partition(mu):
                return False
    return True


def matching_generators(ideal, mu):
    """Generators dividing mu and agreeing with it on their first p entries."""
    out = []
    for lam in ideal.generators:
        p = stats(lam).p
        if all(a <= b for a, b in zip(lam, mu)) and lam[:p] == mu[:p]:
            out.append(lam)
    return out
