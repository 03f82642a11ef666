"""Large cliques in dense induced-C4-free graphs.

Two routes, mirroring the existence proof they implement.  If some
non-adjacent pair has a common neighborhood of size >= beta*n, that
neighborhood must already be a clique (two non-adjacent members would
complete an induced C4) and we are done.  Otherwise a derandomized
dependent random choice: score every vertex x by
Z(x) = |N(x)| - a*Y/(beta*(1-a)*n) - a*(n-1)/2 with Y the missing-edge
count inside N(x), take the argmax, strip a maximal matching of missing
edges from N(x), and what survives together with x is a clique.

All score arithmetic is exact (Fraction), so the argmax is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import FreenessViolationError, GraphFormatError, PreconditionError
from .graph import Graph, InducedEmbedding, VertexSet, iter_bits

BRANCH_CODEGREE = "codegree"
BRANCH_ARGMAX = "argmax"


@dataclass(frozen=True)
class DrcTrace:
    """Full trace of one clique extraction.

    Invariantly clique = {x} | (U minus matched vertices); the codegree
    branch is the m = 0 case with U the fat common neighborhood.
    """

    branch: str
    n: int
    x: int
    U: VertexSet
    Y: int
    Z: Optional[Fraction]
    matching: tuple[tuple[int, int], ...]
    clique: VertexSet
    beta: float
    alpha_density: float


def is_clique(g: Graph, vs: VertexSet) -> bool:
    for v in iter_bits(vs.bits):
        if vs.bits & ~g.adj[v] & ~(1 << v):
            return False
    return True


def _scan(g: Graph, beta: float):
    """Yield the first missing pair whose common neighborhood reaches
    beta*n, asserting cliqueness of every common neighborhood on the way."""
    threshold = beta * g.n
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (g.adj[u] >> v) & 1:
                continue
            common = g.adj[u] & g.adj[v]
            for a in iter_bits(common):
                strangers = common & ~g.adj[a] & ~(1 << a)
                if strangers:
                    b = (strangers & -strangers).bit_length() - 1
                    witness = InducedEmbedding((u, v), tuple(sorted((a, b))))
                    raise FreenessViolationError(
                        f"induced C4 found on missing pair ({u},{v}): "
                        f"common neighbors {a},{b} are not adjacent",
                        witness=witness,
                    )
            if common.bit_count() >= threshold:
                return u, v, common
    return None


def codegree_scan(g: Graph, beta: float) -> Optional[VertexSet]:
    """Common neighborhood of the first missing pair with codegree at
    least beta*n, or None.  Every scanned common neighborhood is checked
    to be a clique; a violation is an induced C4 and raises with its
    witness, so a None return certifies induced-C4-freeness."""
    if beta <= 0.0:
        raise PreconditionError(f"beta must be positive, got {beta}")
    found = _scan(g, beta)
    if found is None:
        return None
    return VertexSet(g.n, found[2])


def maximal_missing_matching(g: Graph, u_set: VertexSet) -> list[tuple[int, int]]:
    """Greedy maximal matching of non-adjacent pairs inside u_set,
    scanning pairs lexicographically.  Unmatched survivors are pairwise
    adjacent."""
    avail = u_set.bits
    out: list[tuple[int, int]] = []
    for u in iter_bits(u_set.bits):
        if not (avail >> u) & 1:
            continue
        cand = avail & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        if cand:
            v = (cand & -cand).bit_length() - 1
            out.append((u, v))
            avail &= ~((1 << u) | (1 << v))
    return out


def _missing_inside(g: Graph, bits: int) -> int:
    inside_degrees = sum((g.adj[v] & bits).bit_count() for v in iter_bits(bits))
    size = bits.bit_count()
    return size * (size - 1) // 2 - inside_degrees // 2


def drc_clique(g: Graph, alpha_density: float, sharp_beta: bool = False) -> DrcTrace:
    """Clique extraction for a graph with e(g) >= alpha_density*C(n,2).

    beta defaults to alpha^2/128; sharp_beta switches to (1-sqrt(1-a))^2
    for empirical comparison.  Deterministic: exact scores, ties to the
    smallest vertex id.
    """
    if g.n < 1:
        raise PreconditionError("empty graph has no cliques")
    if not 0.0 < alpha_density <= 1.0:
        raise PreconditionError(f"alpha_density must lie in (0,1], got {alpha_density}")
    if 2 * g.m < alpha_density * g.n * (g.n - 1):
        raise PreconditionError(
            f"density precondition unmet: e={g.m} < {alpha_density}*C({g.n},2)"
        )
    a = Fraction(alpha_density)
    if sharp_beta:
        beta = Fraction((1.0 - math.sqrt(1.0 - alpha_density)) ** 2)
    else:
        beta = a * a / 128
    if beta == 0:
        raise PreconditionError("beta underflowed to zero; alpha_density too small")
    hit = _scan(g, float(beta))
    if hit is not None:
        u, _, common = hit
        u_set = VertexSet(g.n, common)
        return DrcTrace(
            branch=BRANCH_CODEGREE,
            n=g.n,
            x=u,
            U=u_set,
            Y=0,
            Z=None,
            matching=(),
            clique=VertexSet(g.n, common | (1 << u)),
            beta=float(beta),
            alpha_density=alpha_density,
        )
    best_x = -1
    best_z: Optional[Fraction] = None
    best_y = 0
    shift = a * (g.n - 1) / 2
    for x in range(g.n):
        u_bits = g.adj[x]
        y = _missing_inside(g, u_bits)
        z = Fraction(u_bits.bit_count()) - shift
        if y:
            # a missing edge with a = 1 cannot pass the density pre,
            # so the denominator is never zero here
            z -= a * y / (beta * (1 - a) * g.n)
        if best_z is None or z > best_z:
            best_x, best_z, best_y = x, z, y
    u_set = VertexSet(g.n, g.adj[best_x])
    matching = maximal_missing_matching(g, u_set)
    matched = 0
    for p, q in matching:
        matched |= (1 << p) | (1 << q)
    clique = VertexSet(g.n, (u_set.bits & ~matched) | (1 << best_x))
    return DrcTrace(
        branch=BRANCH_ARGMAX,
        n=g.n,
        x=best_x,
        U=u_set,
        Y=best_y,
        Z=best_z,
        matching=tuple(matching),
        clique=clique,
        beta=float(beta),
        alpha_density=alpha_density,
    )


def matching_audit(trace: DrcTrace) -> bool:
    """Y >= m + C(m,2): the matching plus one extra missing edge per
    matched pair, which induced-C4-freeness forces."""
    m = len(trace.matching)
    return trace.Y >= m + math.comb(m, 2)


# ---------------------------------------------------------------------------
# text form

_TRACE_KEYS = ("branch", "n", "x", "U", "Y", "Z", "matching", "clique", "beta", "alpha_density")


def trace_to_text(trace: DrcTrace) -> str:
    vals = {
        "branch": trace.branch,
        "n": str(trace.n),
        "x": str(trace.x),
        "U": " ".join(str(v) for v in trace.U.members()),
        "Y": str(trace.Y),
        "Z": "" if trace.Z is None else str(trace.Z),
        "matching": " ".join(f"{p}-{q}" for p, q in trace.matching),
        "clique": " ".join(str(v) for v in trace.clique.members()),
        "beta": repr(trace.beta),
        "alpha_density": repr(trace.alpha_density),
    }
    return "\n".join(f"{key}: {vals[key]}".rstrip() for key in _TRACE_KEYS) + "\n"


def trace_from_text(text: str, path: Optional[str] = None) -> DrcTrace:
    got: dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if ":" not in line:
            raise GraphFormatError(f"expected 'key: value', got {raw!r}", path=path, line=line_no)
        key, _, val = line.partition(":")
        got[key.strip()] = val.strip()
    missing = [k for k in _TRACE_KEYS if k not in got]
    if missing:
        raise GraphFormatError(f"trace missing keys: {', '.join(missing)}", path=path)
    try:
        n = int(got["n"])
        pairs = []
        for tok in got["matching"].split():
            p, _, q = tok.partition("-")
            pairs.append((int(p), int(q)))
        return DrcTrace(
            branch=got["branch"],
            n=n,
            x=int(got["x"]),
            U=VertexSet.of(n, (int(v) for v in got["U"].split())),
            Y=int(got["Y"]),
            Z=Fraction(got["Z"]) if got["Z"] else None,
            matching=tuple(pairs),
            clique=VertexSet.of(n, (int(v) for v in got["clique"].split())),
            beta=float(got["beta"]),
            alpha_density=float(got["alpha_density"]),
        )
    except ValueError:
        raise GraphFormatError("malformed trace field", path=path) from None
