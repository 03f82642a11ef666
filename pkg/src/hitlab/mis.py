"""Exact maximum-independent-set machinery.

alpha_with_witness is a bitmask branch-and-bound optimizer; enumerate_mis
lists every maximum independent set (the hyperedge family that hitting
sets must cover); kernel intersects them.  Everything here is the
ground-truth oracle layer, so determinism matters more than speed:
branching order is fixed (degree, then smallest id) and the enumerated
family is canonically ordered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import EnumerationCapError, PreconditionError
from .graph import Graph, VertexSet, iter_bits

ENUM_CAP_DEFAULT = 48


@dataclass(frozen=True)
class MisFamily:
    """All maximum independent sets of one host graph.

    `sets` is canonically ordered: lexicographic by the sorted member
    list of each set (the order a lowest-id-first DFS emits).
    """

    host_n: int
    alpha: int
    sets: tuple[VertexSet, ...]

    @property
    def count(self) -> int:
        return len(self.sets)

    def all_hit(self, t: VertexSet) -> bool:
        return all(s.bits & t.bits for s in self.sets)

    def first_missed(self, t: VertexSet) -> Optional[VertexSet]:
        """First member disjoint from t, in canonical order."""
        for s in self.sets:
            if s.bits & t.bits == 0:
                return s
        return None


def _greedy_mis(adj, pool: int) -> int:
    """Min-degree-first greedy independent set; the initial incumbent."""
    acc = 0
    while pool:
        best_v, best_d = -1, -1
        m = pool
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (adj[v] & pool).bit_count()
            if best_v < 0 or d < best_d:
                best_v, best_d = v, d
        acc |= 1 << best_v
        pool &= ~adj[best_v]
        pool ^= 1 << best_v
    return acc


def _clique_cover_bound(adj, pool: int) -> int:
    # greedy clique cover of the pool; its size bounds alpha(pool) above
    cliques: list[int] = []
    m = pool
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        for i, cb in enumerate(cliques):
            if cb & ~adj[v] == 0:
                cliques[i] = cb | low
                break
        else:
            cliques.append(low)
    return len(cliques)


def alpha_with_witness(g: Graph) -> tuple[int, VertexSet]:
    """Independence number of g and one maximum independent set.

    Branch and bound over bit rows: greedy incumbent, popcount and
    clique-cover pruning, forced inclusion of pool vertices with pool
    degree at most 1, branching on the highest-degree pool vertex
    (smallest id on ties).  Fully deterministic.
    """
    if g.n < 1:
        raise PreconditionError("empty graph has no independence number")
    adj = g.adj
    best_bits = _greedy_mis(adj, (1 << g.n) - 1)
    best_size = best_bits.bit_count()
    state = [best_size, best_bits]

    def rec(pool: int, acc_bits: int, acc_size: int) -> None:
        if acc_size + pool.bit_count() <= state[0]:
            return
        if pool == 0:
            state[0], state[1] = acc_size, acc_bits
            return
        v_branch, d_branch = -1, -1
        m = pool
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            pd = (adj[v] & pool).bit_count()
            if pd <= 1:
                # v plus a non-neighbor of its at most one pool neighbor
                # is never worse than skipping v
                rec((pool & ~adj[v]) ^ low, acc_bits | low, acc_size + 1)
                return
            if pd > d_branch:
                v_branch, d_branch = v, pd
        if acc_size + _clique_cover_bound(adj, pool) <= state[0]:
            return
        bit = 1 << v_branch
        rec(pool & ~adj[v_branch] & ~bit, acc_bits | bit, acc_size + 1)
        rec(pool ^ bit, acc_bits, acc_size)

    rec((1 << g.n) - 1, 0, 0)
    return state[0], VertexSet(g.n, state[1])


def enumerate_mis(g: Graph, cap: int = ENUM_CAP_DEFAULT) -> MisFamily:
    """Complete family of maximum independent sets.

    Pins alpha first, then DFS over ascending vertex ids emitting exactly
    the independent sets of that size; refuses graphs above `cap` to keep
    accidental exponential blowups loud.
    """
    if g.n > cap:
        raise EnumerationCapError(f"n={g.n} exceeds enumeration cap {cap}")
    alpha, _ = alpha_with_witness(g)
    adj = g.adj
    out: list[int] = []

    def rec(pool: int, acc_bits: int, acc_size: int) -> None:
        if acc_size == alpha:
            out.append(acc_bits)
            return
        if acc_size + pool.bit_count() < alpha:
            return
        low = pool & -pool
        v = low.bit_length() - 1
        rec(pool & ~adj[v] & ~low, acc_bits | low, acc_size + 1)
        rec(pool ^ low, acc_bits, acc_size)

    rec((1 << g.n) - 1, 0, 0)
    return MisFamily(host_n=g.n, alpha=alpha, sets=tuple(VertexSet(g.n, b) for b in out))


def kernel(g: Graph, cap: int = ENUM_CAP_DEFAULT) -> VertexSet:
    """Intersection of all maximum independent sets.

    Nonempty kernel means any one member alone is a hitting set.
    """
    fam = enumerate_mis(g, cap=cap)
    bits = (1 << g.n) - 1
    for s in fam.sets:
        bits &= s.bits
        if bits == 0:
            break
    return VertexSet(g.n, bits)


def independence_check(g: Graph, vs: VertexSet) -> bool:
    """True iff vs induces no edge of g."""
    for v in iter_bits(vs.bits):
        if g.adj[v] & vs.bits:
            return False
    return True
