"""Immutable bitset graphs, vertex sets, generators, and pattern detection.

Vertices are dense ids 0..n-1.  Adjacency is one Python int per vertex
(bit j of adj[v] set iff v~j), which keeps set algebra over vertices to
single integer operations.  Graph and VertexSet never mutate after
construction and are safe to share across concurrent workers; generators
are single-threaded and deterministic per seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import PreconditionError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices 0..n-1 of some host graph.

    `bits` is the membership mask; `size` is its popcount.  Instances are
    value objects: frozen, hashable, and comparable by (n, bits).
    """

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative host size {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"vertex id out of range 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, ids: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in ids:
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def _check_host(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError(f"host mismatch: n={self.n} vs n={other.n}")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_host(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_host(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_host(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ~self.bits & ((1 << self.n) - 1))

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self.bits & other.bits == 0

    def issubset(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0


@dataclass(frozen=True)
class InducedEmbedding:
    """Witness of an induced K_{s,t}: side_a of size s, side_b of size t.

    Sides are disjoint, every cross pair is an edge, and no within-side
    pair is an edge.
    """

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    def check(self, g: "Graph") -> bool:
        """True iff this embedding really is an induced K_{s,t} in g."""
        a, b = self.side_a, self.side_b
        if set(a) & set(b):
            return False
        for side in (a, b):
            for u, v in combinations(side, 2):
                if g.has_edge(u, v):
                    return False
        return all(g.has_edge(u, v) for u in a for v in b)


class Graph:
    """Immutable simple undirected graph over vertex ids 0..n-1."""

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: tuple[int, ...]):
        # adj rows are trusted here; use from_edges for validated input
        self.n = n
        self.adj = adj
        self.m = sum(row.bit_count() for row in adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, collapsing duplicate edges; self-loops are errors."""
        if n < 0:
            raise PreconditionError(f"negative vertex count {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u},{v}) out of range 0..{n - 1}")
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors_mask(self, v: int) -> int:
        return self.adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, lexicographic."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for off in iter_bits(rest):
                out.append((u, u + 1 + off))
        return out

    def vertex_set(self, ids: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, ids)

    def full_set(self) -> VertexSet:
        return VertexSet.full(self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def check_invariants(self) -> None:
        """Raise AssertionError unless symmetry, irreflexivity, m all hold."""
        assert len(self.adj) == self.n
        total = 0
        for v, row in enumerate(self.adj):
            assert row >> self.n == 0, f"row {v} addresses vertices >= n"
            assert (row >> v) & 1 == 0, f"self-loop at {v}"
            total += row.bit_count()
            for u in iter_bits(row):
                assert (self.adj[u] >> v) & 1, f"asymmetric pair ({v},{u})"
        assert total == 2 * self.m, "edge count out of sync with rows"


# ---------------------------------------------------------------------------
# deterministic generators


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); each unordered pair kept with probability p."""
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def gen_cluster(sizes: list[int]) -> Graph:
    """Disjoint union of cliques, vertices numbered consecutively per clique."""
    if not sizes:
        raise PreconditionError("cluster graph needs at least one clique")
    if any(q < 1 for q in sizes):
        raise PreconditionError(f"clique sizes must be >= 1, got {sizes}")
    n = sum(sizes)
    rows = [0] * n
    base = 0
    for q in sizes:
        block = ((1 << q) - 1) << base
        for v in range(base, base + q):
            rows[v] = block & ~(1 << v)
        base += q
    return Graph(n, tuple(rows))


def gen_path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _closes_c4(rows: list[int], u: int, v: int) -> bool:
    # adding uv creates a 4-cycle iff some edge (a, b) has a~v and b~u
    for a in iter_bits(rows[v]):
        if rows[a] & rows[u] & ~(1 << v):
            return True
    return False


def gen_c4_free_process(n: int, target_m: int, seed: int) -> Graph:
    """Random edge-addition process that never completes a 4-cycle subgraph.

    The result is C4-subgraph-free, hence induced-C4-free.  May saturate
    below target_m; the returned graph's m records what was achieved.
    """
    if target_m > n * (n - 1) // 2:
        raise PreconditionError(f"target_m {target_m} exceeds C({n},2)")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    random.Random(seed).shuffle(pairs)
    rows = [0] * n
    added = 0
    for u, v in pairs:
        if added >= target_m:
            break
        if not _closes_c4(rows, u, v):
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            added += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# structural operations


def complement(g: Graph) -> Graph:
    """Edge-complement on the same vertex set; an involution."""
    full = (1 << g.n) - 1
    rows = tuple((~g.adj[v] & full) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, rows)


def min_degree_vertex(g: Graph) -> tuple[int, int]:
    """Vertex of minimum degree, smallest id on ties."""
    if g.n < 1:
        raise PreconditionError("empty graph has no vertices")
    best_v, best_d = 0, g.adj[0].bit_count()
    for v in range(1, g.n):
        d = g.adj[v].bit_count()
        if d < best_d:
            best_v, best_d = v, d
    return best_v, best_d


def find_independent_subset(g: Graph, candidates: int, size: int) -> Optional[int]:
    """First (lexicographically earliest) independent `size`-subset of the
    candidate mask, as a mask, or None if none exists."""
    if size == 0:
        return 0
    if candidates.bit_count() < size:
        return None
    adj = g.adj

    # DFS over ascending vertex ids; each chosen vertex restricts the pool
    # to its non-neighbors above it.
    def rec(pool: int, need: int, acc: int) -> Optional[int]:
        if need == 0:
            return acc
        while pool:
            if pool.bit_count() < need:
                return None
            low = pool & -pool
            v = low.bit_length() - 1
            pool ^= low
            got = rec(pool & ~adj[v], need - 1, acc | low)
            if got is not None:
                return got
        return None

    return rec(candidates, size, 0)


def find_induced_kst(g: Graph, s: int, t: int) -> Optional[InducedEmbedding]:
    """Search for an induced K_{s,t}; None when the graph is free of it.

    Exhaustive over ordered A-sides (lexicographically minimal witness
    first).  Exponential in s+t; callers keep s+t small (<= 8 by default).
    """
    if not 1 <= s <= t:
        raise PreconditionError(f"need 1 <= s <= t, got s={s}, t={t}")
    adj = g.adj
    for a_side in combinations(range(g.n), s):
        independent = True
        for i, u in enumerate(a_side):
            for v in a_side[i + 1 :]:
                if (adj[u] >> v) & 1:
                    independent = False
                    break
            if not independent:
                break
        if not independent:
            continue
        common = (1 << g.n) - 1
        for u in a_side:
            common &= adj[u]
        if common.bit_count() < t:
            continue
        b_mask = find_independent_subset(g, common, t)
        if b_mask is not None:
            return InducedEmbedding(a_side, tuple(iter_bits(b_mask)))
    return None
