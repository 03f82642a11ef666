"""Shared graphs and independent oracles for the test suite.

The brute-force routines here deliberately share no code with the
library: subset DP for independent sets, direct pair scans for pattern
checks.  Slow but unarguable.
"""

from __future__ import annotations

import random
from itertools import combinations

from hitlab.graph import Graph, gen_gnp

# outer C5, inner pentagram, spokes
PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
]


def petersen() -> Graph:
    return Graph.from_edges(10, PETERSEN_EDGES)


def gen_book(pages: int) -> Graph:
    """Triangles glued along the spine edge (0,1).

    Induced-C4-free, and any two pages form a missing pair whose common
    neighborhood is the spine, so the codegree scan fires immediately.
    """
    edges = [(0, 1)]
    for i in range(pages):
        edges += [(0, 2 + i), (1, 2 + i)]
    return Graph.from_edges(2 + pages, edges)


def brute_mis_family(g: Graph) -> tuple[int, list[int]]:
    """(alpha, every maximum independent set as a mask) by subset DP."""
    n = g.n
    indep = bytearray(1 << n)
    indep[0] = 1
    best = 0
    masks: list[int] = []
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        if indep[rest] and g.adj[v] & rest == 0:
            indep[mask] = 1
            c = mask.bit_count()
            if c > best:
                best, masks = c, [mask]
            elif c == best:
                masks.append(mask)
    return best, masks


def brute_min_hitting(g: Graph) -> int:
    """Smallest set meeting every maximum independent set, by direct
    subset search in size order."""
    _, masks = brute_mis_family(g)
    for size in range(0, g.n + 1):
        for combo in combinations(range(g.n), size):
            bits = 0
            for v in combo:
                bits |= 1 << v
            if all(bits & m for m in masks):
                return size
    raise AssertionError("V itself always hits")


def has_induced_kst_brute(g: Graph, s: int, t: int) -> bool:
    for a_side in combinations(range(g.n), s):
        if any(g.has_edge(u, v) for u, v in combinations(a_side, 2)):
            continue
        common = (1 << g.n) - 1
        for u in a_side:
            common &= g.adj[u]
        pool = [v for v in range(g.n) if (common >> v) & 1]
        for b_side in combinations(pool, t):
            if not any(g.has_edge(u, v) for u, v in combinations(b_side, 2)):
                return True
    return False


def random_gnp_corpus(count: int, n_lo: int, n_hi: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        p = rng.choice((0.15, 0.3, 0.5, 0.7))
        out.append(gen_gnp(n, p, rng.randrange(2**30)))
    return out


def members(mask: int) -> tuple[int, ...]:
    return tuple(v for v in range(mask.bit_length()) if (mask >> v) & 1)
