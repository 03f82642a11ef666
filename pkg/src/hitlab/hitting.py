"""Hitting sets for all maximum independent sets of a K_{s,t}-free graph.

The centerpiece is construct_hitting_set: either the minimum-degree
shortcut (a closed neighborhood hits everything) or the sampled-core
construction: bin the outside vertices by their degree into a maximum
independent set I, keep the lightest bin S_j, sample a k-subset I_j of I,
exclude the union K of common neighborhoods of its s-subsets, then take
an averaged low-residual-degree subset H of I and output
T = H ∪ N_R(H) ∪ S_j.  Validity of T never depends on the sample seed;
only |T| does.  Every run yields a replayable HittingCertificate.

Also here: the exact minimum hitting set (the oracle the construction is
sandwiched against), uniform-sampling search with its union bound, and
the budget / size-bound arithmetic used to audit the averaging step.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import (
    FreenessViolationError,
    GraphFormatError,
    InfeasibleParamsError,
    PreconditionError,
    VerificationFailure,
)
from .graph import Graph, InducedEmbedding, VertexSet, find_independent_subset, iter_bits, min_degree_vertex
from .mis import ENUM_CAP_DEFAULT, alpha_with_witness, enumerate_mis, independence_check

MODE_LOW_DEGREE = "low-degree"
MODE_SAMPLED_CORE = "sampled-core"
MODE_UNIFORM_SAMPLE = "uniform-sample"
MODE_TRIVIAL = "trivial"


@dataclass(frozen=True)
class ParamSchedule:
    """Tunable constants of the construction.

    Concrete schedules carry absolute degree bins (half-open [lo, hi),
    ordered from the heaviest interval down, pairwise disjoint) and one
    sample size k.  Asymptotic schedules instead carry per-bin natural-log
    values (log_bins, log_ks) and are informational: `feasible` says
    whether the textbook parameter values fit inside [1, n] at all.
    """

    s: int
    t: int
    delta: float
    k: int = 0
    bins: tuple[tuple[float, float], ...] = ()
    c: Optional[float] = None
    asymptotic: bool = False
    feasible: bool = True
    log_bins: Optional[tuple[tuple[float, float], ...]] = None
    log_ks: Optional[tuple[float, ...]] = None

    def __post_init__(self):
        if not (isinstance(self.s, int) and isinstance(self.t, int)):
            raise PreconditionError("s and t must be integers")
        if not 1 <= self.s <= self.t:
            raise PreconditionError(f"need 1 <= s <= t, got s={self.s}, t={self.t}")
        if not 0.0 < self.delta < 1.0:
            raise PreconditionError(f"delta must lie in (0,1), got {self.delta}")
        if self.c is not None and not 0.0 < self.c <= 1.0:
            raise PreconditionError(f"c must lie in (0,1], got {self.c}")
        if self.asymptotic:
            if not self.log_bins or not self.log_ks or len(self.log_bins) != len(self.log_ks):
                raise PreconditionError("asymptotic schedule needs matching log_bins/log_ks")
            return
        if self.k < self.s:
            raise PreconditionError(f"k={self.k} below s={self.s}: no s-subsets to sample")
        bins = tuple((float(lo), float(hi)) for lo, hi in self.bins)
        object.__setattr__(self, "bins", bins)
        if not bins:
            raise PreconditionError("schedule needs at least one degree bin")
        for lo, hi in bins:
            if not (0.0 <= lo < hi):
                raise PreconditionError(f"bad bin [{lo},{hi}): need 0 <= lo < hi")
        for (lo_prev, _), (_, hi_next) in zip(bins, bins[1:]):
            if hi_next > lo_prev:
                raise PreconditionError(
                    "bins must descend and stay disjoint: "
                    f"interval ending at {hi_next} overlaps one starting at {lo_prev}"
                )

    @property
    def h_size(self) -> int:
        """(t-1)*C(k,s)+1, the forced size of the averaged subset H."""
        return (self.t - 1) * math.comb(self.k, self.s) + 1

    @property
    def num_bins(self) -> int:
        return len(self.log_bins) if self.asymptotic else len(self.bins)


def auto_bins(delta: float) -> tuple[tuple[float, float], ...]:
    """ceil(2/delta) unit-width bins descending to [1,2).

    Enough bins for the pigeonhole count (n-|I|)/#bins <= (1-c)*delta*n/2,
    which is what the size audit needs.
    """
    if not 0.0 < delta < 1.0:
        raise PreconditionError(f"delta must lie in (0,1), got {delta}")
    j_max = math.ceil(2.0 / delta)
    return tuple((float(j_max - j), float(j_max - j + 1)) for j in range(j_max))


def _pow_or_inf(base: float, exp: int) -> float:
    try:
        return base ** exp
    except OverflowError:
        return math.inf


def asymptotic_schedule(n: int, s: int, t: int, delta: float) -> ParamSchedule:
    """The textbook parameter point, evaluated in natural-log space.

    Bin j of ceil(2/delta) covers degrees [n*(ln n)^-(10s)^(2j+1),
    n*(ln n)^-(10s)^(2j-1)) with sample size k_j = (ln n)^((10s)^(2j)).
    At desk scale k_1 already dwarfs n, so `feasible` is false and the
    schedule is a report, not a runnable input.
    """
    if n < 3:
        raise PreconditionError(f"need n >= 3, got {n}")
    if not 0.0 < delta < 1.0:
        raise PreconditionError(f"delta must lie in (0,1), got {delta}")
    if not 1 <= s <= t:
        raise PreconditionError(f"need 1 <= s <= t, got s={s}, t={t}")
    ln_n = math.log(n)
    ln_ln = math.log(ln_n)
    base = float(10 * s)
    j_max = math.ceil(2.0 / delta)
    log_bins = []
    log_ks = []
    feasible = True
    for j in range(1, j_max + 1):
        log_k = _pow_or_inf(base, 2 * j) * ln_ln
        log_lo = ln_n - _pow_or_inf(base, 2 * j + 1) * ln_ln
        log_hi = ln_n - _pow_or_inf(base, 2 * j - 1) * ln_ln
        log_ks.append(log_k)
        log_bins.append((log_lo, log_hi))
        if log_lo < 0.0 or log_k > ln_n:
            feasible = False
    return ParamSchedule(
        s=s,
        t=t,
        delta=delta,
        asymptotic=True,
        feasible=feasible,
        log_bins=tuple(log_bins),
        log_ks=tuple(log_ks),
    )


@dataclass(frozen=True)
class HittingCertificate:
    """Replayable trace of one hitting-set run.

    For sampled-core runs T = H | NH | S_j and all intermediate sets are
    recorded; low-degree runs record the center vertex instead; trivial
    runs have T = V.  size_accounting is (|H|, |NH|, |S_j|).
    """

    mode: str
    n: int
    seed: Optional[int]
    T: VertexSet
    I: VertexSet
    bin_index: int
    S_j: VertexSet
    I_j: VertexSet
    K: VertexSet
    H: VertexSet
    NH: VertexSet
    center: Optional[int]
    size_accounting: tuple[int, int, int]


def _empty_cert_fields(n: int) -> dict:
    empty = VertexSet.empty(n)
    return dict(I=empty, bin_index=0, S_j=empty, I_j=empty, K=empty, H=empty, NH=empty)


def closed_neighborhood_hitting(g: Graph, v: int, seed: Optional[int] = None) -> HittingCertificate:
    """Hitting set {v} | N(v): a maximum independent set avoiding all of
    it could absorb v and grow, which is absurd."""
    if not 0 <= v < g.n:
        raise PreconditionError(f"vertex {v} out of range 0..{g.n - 1}")
    t_set = VertexSet(g.n, g.adj[v] | (1 << v))
    return HittingCertificate(
        mode=MODE_LOW_DEGREE,
        n=g.n,
        seed=seed,
        T=t_set,
        center=v,
        size_accounting=(0, 0, 0),
        **_empty_cert_fields(g.n),
    )


def bin_and_select(g: Graph, i_set: VertexSet, sched: ParamSchedule) -> tuple[int, VertexSet]:
    """Assign each outside vertex to the bin holding its I-degree, then
    return the 1-based index and content of the lightest bin (ties to the
    smallest index).  The winner's size is at most (n-|I|)/#bins."""
    if sched.asymptotic:
        raise PreconditionError("asymptotic schedule has no concrete bins")
    masks = [0] * len(sched.bins)
    outside = ((1 << g.n) - 1) & ~i_set.bits
    for v in iter_bits(outside):
        d = (g.adj[v] & i_set.bits).bit_count()
        for idx, (lo, hi) in enumerate(sched.bins):
            if lo <= d < hi:
                masks[idx] |= 1 << v
                break
    best = 0
    for idx in range(1, len(masks)):
        if masks[idx].bit_count() < masks[best].bit_count():
            best = idx
    return best + 1, VertexSet(g.n, masks[best])


def sample_Ij(i_set: VertexSet, k: int, seed: int) -> VertexSet:
    """Uniform k-subset of I, without replacement, fixed by the seed."""
    if k > i_set.size:
        raise PreconditionError(f"cannot sample k={k} from |I|={i_set.size}")
    if k < 0:
        raise PreconditionError(f"negative sample size {k}")
    rng = random.Random(seed)
    chosen = rng.sample(i_set.members(), k)
    return VertexSet.of(i_set.n, chosen)


def build_K(g: Graph, i_j: VertexSet, s: int, t: int) -> VertexSet:
    """Union over s-subsets of I_j of their common neighborhoods.

    Each common neighborhood must induce independence number <= t-1;
    an independent t-subset inside one is exactly an induced K_{s,t}
    and raises a freeness violation carrying that witness.
    """
    if i_j.size < s:
        raise PreconditionError(f"|I_j|={i_j.size} below s={s}")
    if not independence_check(g, i_j):
        raise PreconditionError("I_j is not independent")
    full = (1 << g.n) - 1
    k_bits = 0
    for side_a in combinations(i_j.members(), s):
        common = full
        for p in side_a:
            common &= g.adj[p]
        hit = find_independent_subset(g, common, t)
        if hit is not None:
            witness = InducedEmbedding(side_a, tuple(iter_bits(hit)))
            raise FreenessViolationError(
                f"induced K_{{{s},{t}}} found: sides {side_a} / {witness.side_b}",
                witness=witness,
            )
        k_bits |= common
    return VertexSet(g.n, k_bits)


def choose_H(g: Graph, i_set: VertexSet, r_set: VertexSet, h_size: int) -> VertexSet:
    """The h_size vertices of I with fewest residual neighbors (ties by
    id); their residual degrees total at most h_size * e / |I| where
    e = |E(I, R)|, the averaging argument made deterministic."""
    if r_set.bits & i_set.bits:
        raise PreconditionError("residual set overlaps I")
    if h_size > i_set.size:
        raise InfeasibleParamsError(
            f"need |H|={h_size} but |I|={i_set.size}; pick smaller k or t"
        )
    ranked = sorted(i_set.members(), key=lambda v: ((g.adj[v] & r_set.bits).bit_count(), v))
    return VertexSet.of(i_set.n, ranked[:h_size])


def construct_hitting_set(
    g: Graph, sched: ParamSchedule, seed: int, allow_trivial: bool = False
) -> HittingCertificate:
    """Run the full construction and return its certificate.

    Shortcut first: a vertex of degree below delta*n - 1 certifies via its
    closed neighborhood.  Otherwise sample I_j inside a maximum
    independent set and assemble T = H | N_R(H) | S_j.  T is a hitting
    set for every seed; freeness violations and h_size > alpha surface as
    errors (or as the explicit T = V fallback when allow_trivial is set).
    """
    if sched.asymptotic:
        if not sched.feasible:
            raise InfeasibleParamsError(
                "asymptotic schedule infeasible at this n; supply explicit bins"
            )
        raise InfeasibleParamsError(
            "asymptotic schedule is informational only; supply explicit bins"
        )
    v, d = min_degree_vertex(g)
    if d < sched.delta * g.n - 1:
        return closed_neighborhood_hitting(g, v, seed=seed)
    alpha, i_set = alpha_with_witness(g)
    h_size = sched.h_size
    if h_size > alpha or sched.k > alpha:
        if allow_trivial:
            return HittingCertificate(
                mode=MODE_TRIVIAL,
                n=g.n,
                seed=seed,
                T=VertexSet.full(g.n),
                center=None,
                size_accounting=(0, 0, 0),
                **{**_empty_cert_fields(g.n), "I": i_set},
            )
        raise InfeasibleParamsError(
            f"schedule needs |H|={h_size} and k={sched.k} inside alpha={alpha}"
        )
    bin_index, s_j = bin_and_select(g, i_set, sched)
    i_j = sample_Ij(i_set, sched.k, seed)
    k_set = build_K(g, i_j, sched.s, sched.t)
    full = (1 << g.n) - 1
    r_bits = full & ~(i_set.bits | k_set.bits | s_j.bits)
    r_set = VertexSet(g.n, r_bits)
    h_set = choose_H(g, i_set, r_set, h_size)
    nh_bits = 0
    for h in iter_bits(h_set.bits):
        nh_bits |= g.adj[h]
    nh_set = VertexSet(g.n, nh_bits & r_bits)
    t_set = VertexSet(g.n, h_set.bits | nh_set.bits | s_j.bits)
    return HittingCertificate(
        mode=MODE_SAMPLED_CORE,
        n=g.n,
        seed=seed,
        T=t_set,
        I=i_set,
        bin_index=bin_index,
        S_j=s_j,
        I_j=i_j,
        K=k_set,
        H=h_set,
        NH=nh_set,
        center=None,
        size_accounting=(h_set.size, nh_set.size, s_j.size),
    )


def verify_hitting_set(g: Graph, t_set: VertexSet, cap: int = ENUM_CAP_DEFAULT) -> bool:
    """True iff every maximum independent set of g meets t_set."""
    return enumerate_mis(g, cap=cap).all_hit(t_set)


def residual_edges(g: Graph, cert: HittingCertificate) -> int:
    """e = |E(I, R)| recomputed from a sampled-core certificate."""
    if cert.mode != MODE_SAMPLED_CORE:
        raise PreconditionError(f"no residual set in mode {cert.mode!r}")
    r_bits = ((1 << g.n) - 1) & ~(cert.I.bits | cert.K.bits | cert.S_j.bits)
    return sum((g.adj[v] & cert.I.bits).bit_count() for v in iter_bits(r_bits))


# ---------------------------------------------------------------------------
# exact minimum hitting set over the MIS hypergraph


def _disjoint_lower_bound(edges: list[int], pool: int) -> int:
    used = 0
    count = 0
    for e in edges:
        ep = e & pool
        if ep == 0:
            return 1 << 30
        if ep & used == 0:
            used |= ep
            count += 1
    return count


def _exists_cover(edges: list[int], budget: int, pool: int) -> bool:
    if not edges:
        return True
    if budget <= 0:
        return False
    if _disjoint_lower_bound(edges, pool) > budget:
        return False
    # branch on the edge with fewest usable vertices
    best = None
    for e in edges:
        ep = e & pool
        c = ep.bit_count()
        if c == 0:
            return False
        if best is None or c < best.bit_count():
            best = ep
            if c == 1:
                break
    removed = 0
    for v in iter_bits(best):
        bit = 1 << v
        rest = [e for e in edges if e & bit == 0]
        if _exists_cover(rest, budget - 1, pool & ~removed & ~bit):
            return True
        removed |= bit
    return False


def _greedy_cover(edges: list[int], n: int) -> int:
    covered_mask = 0
    left = edges
    out = 0
    while left:
        best_v, best_c = 0, -1
        for v in range(n):
            bit = 1 << v
            if covered_mask & bit:
                continue
            c = sum(1 for e in left if e & bit)
            if c > best_c:
                best_v, best_c = v, c
        covered_mask |= 1 << best_v
        out += 1
        left = [e for e in left if e & (1 << best_v) == 0]
    return out


def min_hitting_set(g: Graph, cap: int = ENUM_CAP_DEFAULT) -> tuple[int, VertexSet]:
    """h(g) with the lexicographically least minimum hitting set.

    Branch and bound over the maximum-independent-set hyperedges; the
    witness is rebuilt greedily, fixing the smallest feasible vertex at
    each position.
    """
    fam = enumerate_mis(g, cap=cap)
    edges = [vs.bits for vs in fam.sets]
    full = (1 << g.n) - 1
    lb = _disjoint_lower_bound(edges, full)
    ub = _greedy_cover(edges, g.n)
    size = lb
    while size < ub and not _exists_cover(edges, size, full):
        size += 1
    chosen: list[int] = []
    uncovered = edges
    start = 0
    budget = size
    while uncovered:
        for v in range(start, g.n):
            bit = 1 << v
            if not any(e & bit for e in uncovered):
                continue
            rest = [e for e in uncovered if e & bit == 0]
            tail_pool = full & ~((bit << 1) - 1)
            if _exists_cover(rest, budget - 1, tail_pool):
                chosen.append(v)
                uncovered = rest
                budget -= 1
                start = v + 1
                break
        else:
            raise AssertionError("lex reconstruction lost feasibility")
    return size, VertexSet.of(g.n, chosen)


# ---------------------------------------------------------------------------
# uniform sampling (the probabilistic hitting-set existence argument)


@dataclass(frozen=True)
class SampleHitResult:
    """Outcome of repeated uniform p-subset trials.

    hit is the first sampled set that verified (None if all trials
    failed); union_bound is count * (1 - p/n)^alpha, the analytic
    failure-probability envelope.
    """

    hit: Optional[VertexSet]
    hit_trial: Optional[int]
    fail_rate: float
    union_bound: float
    trials: int
    p: int
    seed: int

    def to_certificate(self) -> Optional[HittingCertificate]:
        if self.hit is None:
            return None
        return HittingCertificate(
            mode=MODE_UNIFORM_SAMPLE,
            n=self.hit.n,
            seed=self.seed,
            T=self.hit,
            center=None,
            size_accounting=(0, 0, 0),
            **_empty_cert_fields(self.hit.n),
        )


def sample_hitting_set(
    g: Graph, p: int, seed: int, trials: int, cap: int = ENUM_CAP_DEFAULT
) -> SampleHitResult:
    if not 0 <= p <= g.n:
        raise PreconditionError(f"sample size p={p} outside 0..{g.n}")
    if trials < 1:
        raise PreconditionError(f"need at least one trial, got {trials}")
    fam = enumerate_mis(g, cap=cap)
    union_bound = fam.count * (1.0 - p / g.n) ** fam.alpha
    rng = random.Random(seed)
    ids = range(g.n)
    fails = 0
    hit = None
    hit_trial = None
    for i in range(trials):
        bits = 0
        for v in rng.sample(ids, p):
            bits |= 1 << v
        cand = VertexSet(g.n, bits)
        if fam.all_hit(cand):
            if hit is None:
                hit, hit_trial = cand, i
        else:
            fails += 1
    return SampleHitResult(
        hit=hit,
        hit_trial=hit_trial,
        fail_rate=fails / trials,
        union_bound=union_bound,
        trials=trials,
        p=p,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# arithmetic audits


def budget(n: int, c: float, delta: float, k: int, s: int, t: int) -> float:
    """delta*c*n^2 / (2(t-1)C(k,s)+2) - c*n.

    Negative means the parameter point cannot certify |T| < delta*n.
    """
    if min(n, k, s, t) < 1 or s > t:
        raise PreconditionError("need positive n, k, 1 <= s <= t")
    if not 0.0 < c <= 0.5:
        raise PreconditionError(f"c must lie in (0, 1/2], got {c}")
    if delta <= 0.0:
        raise PreconditionError(f"delta must be positive, got {delta}")
    denom = 2 * (t - 1) * math.comb(k, s) + 2
    return delta * c * n * n / denom - c * n


def size_bound_check(cert: HittingCertificate, sched: ParamSchedule, e_observed: int) -> bool:
    """Audit |T| < h + h*e/|I| + delta*n/2 with exact arithmetic.

    h is the schedule's forced |H|; |I| plays the role of c*n.  This is
    the averaging step's displayed inequality with the observed residual
    edge count plugged in.
    """
    if cert.mode != MODE_SAMPLED_CORE:
        raise PreconditionError(f"size bound audits {MODE_SAMPLED_CORE} runs, got {cert.mode!r}")
    if e_observed < 0:
        raise PreconditionError(f"negative edge count {e_observed}")
    h = sched.h_size
    alpha = cert.I.size
    rhs = Fraction(h) + Fraction(h * e_observed, alpha) + Fraction(sched.delta) * cert.n / 2
    return cert.T.size < rhs


# ---------------------------------------------------------------------------
# certificate text form and replay

_CERT_KEYS = (
    "mode",
    "n",
    "seed",
    "center",
    "bin_index",
    "I",
    "S_j",
    "I_j",
    "K",
    "H",
    "NH",
    "T",
    "size_accounting",
)


def _ids_text(vs: VertexSet) -> str:
    return " ".join(str(v) for v in vs.members())


def certificate_to_text(cert: HittingCertificate) -> str:
    vals = {
        "mode": cert.mode,
        "n": str(cert.n),
        "seed": "" if cert.seed is None else str(cert.seed),
        "center": "" if cert.center is None else str(cert.center),
        "bin_index": str(cert.bin_index),
        "I": _ids_text(cert.I),
        "S_j": _ids_text(cert.S_j),
        "I_j": _ids_text(cert.I_j),
        "K": _ids_text(cert.K),
        "H": _ids_text(cert.H),
        "NH": _ids_text(cert.NH),
        "T": _ids_text(cert.T),
        "size_accounting": " ".join(str(x) for x in cert.size_accounting),
    }
    return "\n".join(f"{key}: {vals[key]}".rstrip() for key in _CERT_KEYS) + "\n"


def certificate_from_text(text: str, path: Optional[str] = None) -> HittingCertificate:
    got: dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if ":" not in line:
            raise GraphFormatError(f"expected 'key: value', got {raw!r}", path=path, line=line_no)
        key, _, val = line.partition(":")
        key = key.strip()
        if key not in _CERT_KEYS:
            raise GraphFormatError(f"unknown certificate key {key!r}", path=path, line=line_no)
        if key in got:
            raise GraphFormatError(f"duplicate certificate key {key!r}", path=path, line=line_no)
        got[key] = val.strip()
    missing = [k for k in _CERT_KEYS if k not in got]
    if missing:
        raise GraphFormatError(f"certificate missing keys: {', '.join(missing)}", path=path)

    def ints(key: str) -> list[int]:
        try:
            return [int(tok) for tok in got[key].split()]
        except ValueError:
            raise GraphFormatError(f"bad integer list for {key!r}", path=path) from None

    try:
        n = int(got["n"])
    except ValueError:
        raise GraphFormatError("bad vertex count", path=path) from None
    acct = ints("size_accounting")
    if len(acct) != 3:
        raise GraphFormatError("size_accounting needs three counts", path=path)
    return HittingCertificate(
        mode=got["mode"],
        n=n,
        seed=int(got["seed"]) if got["seed"] else None,
        center=int(got["center"]) if got["center"] else None,
        bin_index=int(got["bin_index"]),
        I=VertexSet.of(n, ints("I")),
        S_j=VertexSet.of(n, ints("S_j")),
        I_j=VertexSet.of(n, ints("I_j")),
        K=VertexSet.of(n, ints("K")),
        H=VertexSet.of(n, ints("H")),
        NH=VertexSet.of(n, ints("NH")),
        T=VertexSet.of(n, ints("T")),
        size_accounting=(acct[0], acct[1], acct[2]),
    )


def validate_certificate(g: Graph, cert: HittingCertificate, sched: Optional[ParamSchedule] = None) -> None:
    """Structural re-check of a certificate against its graph.

    Raises VerificationFailure on the first broken invariant; passing a
    schedule additionally pins |H|, |I_j|, and the bin membership of S_j.
    """

    def fail(msg: str):
        raise VerificationFailure(f"certificate invalid: {msg}")

    if cert.n != g.n:
        fail(f"host mismatch: certificate n={cert.n}, graph n={g.n}")
    if cert.mode == MODE_LOW_DEGREE:
        if cert.center is None:
            fail("low-degree certificate without center vertex")
        expect = g.adj[cert.center] | (1 << cert.center)
        if cert.T.bits != expect:
            fail("T is not the closed neighborhood of the center")
        return
    if cert.mode == MODE_TRIVIAL:
        if cert.T.bits != (1 << g.n) - 1:
            fail("trivial certificate must carry T = V")
        return
    if cert.mode == MODE_UNIFORM_SAMPLE:
        return
    if cert.mode != MODE_SAMPLED_CORE:
        fail(f"unknown mode {cert.mode!r}")
    if cert.T.bits != cert.H.bits | cert.NH.bits | cert.S_j.bits:
        fail("T != H | NH | S_j")
    if not cert.H.issubset(cert.I):
        fail("H not inside I")
    if not cert.I_j.issubset(cert.I):
        fail("I_j not inside I")
    if cert.K.bits & cert.I.bits:
        fail("K intersects I")
    if cert.S_j.bits & cert.I.bits:
        fail("S_j intersects I")
    if not independence_check(g, cert.I):
        fail("I is not independent")
    r_bits = ((1 << g.n) - 1) & ~(cert.I.bits | cert.K.bits | cert.S_j.bits)
    nh = 0
    for h in iter_bits(cert.H.bits):
        nh |= g.adj[h]
    if cert.NH.bits != nh & r_bits:
        fail("NH is not N(H) restricted to the residual set")
    if cert.size_accounting != (cert.H.size, cert.NH.size, cert.S_j.size):
        fail("size accounting out of sync")
    if sched is not None:
        if cert.H.size != sched.h_size:
            fail(f"|H|={cert.H.size} but schedule forces {sched.h_size}")
        if cert.I_j.size != sched.k:
            fail(f"|I_j|={cert.I_j.size} but schedule samples k={sched.k}")
        if not 1 <= cert.bin_index <= len(sched.bins):
            fail(f"bin index {cert.bin_index} outside schedule")
        lo, hi = sched.bins[cert.bin_index - 1]
        for v in iter_bits(cert.S_j.bits):
            d = (g.adj[v] & cert.I.bits).bit_count()
            if not lo <= d < hi:
                fail(f"vertex {v} with I-degree {d} outside bin [{lo},{hi})")
        k_expect = 0
        for v in range(g.n):
            if (g.adj[v] & cert.I_j.bits).bit_count() >= sched.s:
                k_expect |= 1 << v
        if cert.K.bits != k_expect:
            fail("K differs from the common-neighborhood union of I_j")


def replay_check(g: Graph, cert: HittingCertificate, sched: Optional[ParamSchedule] = None) -> bool:
    """Reproduce the certificate from (g, sched, seed) and compare.

    Uniform-sample certificates cannot be re-derived from the record
    alone, so they replay as a verification of T.
    """
    if cert.mode == MODE_LOW_DEGREE:
        if cert.center is None:
            return False
        return closed_neighborhood_hitting(g, cert.center, seed=cert.seed) == cert
    if cert.mode == MODE_UNIFORM_SAMPLE:
        return verify_hitting_set(g, cert.T)
    if sched is None:
        raise PreconditionError(f"replaying a {cert.mode} certificate needs its schedule")
    if cert.seed is None:
        return False
    rebuilt = construct_hitting_set(
        g, sched, cert.seed, allow_trivial=cert.mode == MODE_TRIVIAL
    )
    return rebuilt == cert
