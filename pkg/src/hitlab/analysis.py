"""Numerics behind the expectation argument, plus the experiment harness.

The residual edge count e = |E(I, V minus (I | K | S_j))| is a random
variable of the I_j sample.  This module computes the probability that a
vertex escapes K two ways (exact hypergeometric tail and the
binomial-form estimate written with independent draws), evaluates the
two displayed upper bounds on E[e] in natural-log space, estimates e by
seeded Monte Carlo, and sweeps graph families into CSV records.

Everything is deterministic per master seed: per-trial and per-cell
seeds are derived by hashing, and aggregation follows index order no
matter how many workers run.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import ConfigError, HitlabError, PreconditionError, VerificationFailure
from .graph import (
    Graph,
    VertexSet,
    find_induced_kst,
    gen_c4_free_process,
    gen_cluster,
    gen_cycle,
    gen_gnp,
    gen_path,
    iter_bits,
    min_degree_vertex,
)
from .hitting import (
    MODE_SAMPLED_CORE,
    ParamSchedule,
    asymptotic_schedule,
    auto_bins,
    bin_and_select,
    build_K,
    certificate_to_text,
    construct_hitting_set,
    min_hitting_set,
    residual_edges,
    sample_Ij,
    verify_hitting_set,
)
from .mis import alpha_with_witness

CSV_HEADER = "schema,family,n,seed,alpha,h_exact,t_bet,t_trivial,e_observed,runtime_ms"
CSV_SCHEMA = "1"


def worker_count() -> int:
    """Worker cap from HITLAB_THREADS; 1 (sequential) when unset."""
    raw = os.environ.get("HITLAB_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def derive_seed(master: int, index: int, label: str = "") -> int:
    """Stable 64-bit per-trial seed; independent streams per label."""
    digest = hashlib.blake2b(f"{master}:{label}:{index}".encode(), digest_size=8)
    return int.from_bytes(digest.digest(), "big")


# ---------------------------------------------------------------------------
# intersection probabilities


def hypergeom_tail(i_size: int, d: int, k: int, s: int) -> Fraction:
    """P[X <= s-1] for X = |I_j & N_I(v)| under a uniform k-subset I_j.

    Exactly the probability that v escapes the excluded set K.
    """
    if not 0 <= d <= i_size:
        raise PreconditionError(f"need 0 <= d <= |I|, got d={d}, |I|={i_size}")
    if not 0 <= k <= i_size:
        raise PreconditionError(f"need 0 <= k <= |I|, got k={k}, |I|={i_size}")
    if s < 1:
        raise PreconditionError(f"need s >= 1, got {s}")
    total = math.comb(i_size, k)
    acc = 0
    for x in range(0, min(s - 1, k, d) + 1):
        acc += math.comb(d, x) * math.comb(i_size - d, k - x)
    return Fraction(acc, total)


def prob_low_intersection(i_size: int, d: int, k: int, s: int) -> tuple[float, float]:
    """(exact, binomial_form) escape probabilities for one vertex.

    exact is the hypergeometric tail; binomial_form treats the k draws
    as independent with success rate d/|I|, the upper-estimate shape
    sum_x C(k,x) (1-d/|I|)^(k-x) (d/|I|)^x.  Both are reported so the
    gap is measurable.
    """
    exact = float(hypergeom_tail(i_size, d, k, s))
    ratio = d / i_size if i_size else 0.0
    est = 0.0
    for x in range(0, s):
        est += math.comb(k, x) * (1.0 - ratio) ** (k - x) * ratio ** x
    return exact, est


def _ln(v: float) -> float:
    if v <= 0.0:
        return -math.inf
    return math.log(v)


def _logsumexp(vals: list[float]) -> float:
    top = max(vals, default=-math.inf)
    if top == -math.inf:
        return -math.inf
    return top + math.log(sum(math.exp(v - top) for v in vals))


def analytic_e_bound(n: int, c: float, sched: ParamSchedule, j: int) -> tuple[float, float]:
    """The two E[e] upper bounds for bin j, as natural logs.

    a_s bounds the low-degree side: theta_lo * (1-c) * n.  a_l bounds the
    high-degree side: c(1-c)n^2 * sum_{x<s} k^x (1 - theta_hi/(cn))^(k-x).
    Log space keeps astronomically small or large values representable;
    -inf means the bound vanished.
    """
    if not 0.0 < c <= 1.0:
        raise PreconditionError(f"c must lie in (0,1], got {c}")
    if not 1 <= j <= sched.num_bins:
        raise PreconditionError(f"bin index {j} outside 1..{sched.num_bins}")
    s = sched.s
    ln_n = math.log(n)
    ln_1c = _ln(1.0 - c)
    if sched.asymptotic:
        log_lo, log_hi = sched.log_bins[j - 1]
        log_k = sched.log_ks[j - 1]
        a_s = log_lo + ln_1c + ln_n
        log_q = log_hi - math.log(c) - ln_n
        if log_q >= 0.0:
            return a_s, -math.inf
        terms = []
        q = math.exp(log_q)
        k_real = math.exp(log_k) if log_k < 700.0 else math.inf
        for x in range(0, s):
            if q > 1e-12 and k_real != math.inf:
                terms.append(x * log_k + (k_real - x) * math.log1p(-q))
            else:
                # ln(1-q) = -q to relative error q; k dominates x
                try:
                    tail = -math.exp(log_k + log_q)
                except OverflowError:
                    tail = -math.inf
                terms.append(x * log_k + tail)
        a_l = _ln(c) + ln_1c + 2.0 * ln_n + _logsumexp(terms)
        return a_s, a_l
    theta_lo, theta_hi = sched.bins[j - 1]
    k = sched.k
    a_s = _ln(theta_lo) + ln_1c + ln_n
    q = theta_hi / (c * n)
    terms = []
    for x in range(0, s):
        if q >= 1.0:
            terms.append(-math.inf if k - x > 0 else x * _ln(float(k)))
        else:
            terms.append(x * _ln(float(k)) + (k - x) * math.log1p(-q))
    a_l = _ln(c) + ln_1c + 2.0 * ln_n + _logsumexp(terms)
    return a_s, a_l


# ---------------------------------------------------------------------------
# Monte Carlo estimation of e


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    samples: tuple[int, ...]


def _residual_edge_count(g: Graph, i_bits: int, excluded: int) -> int:
    r_bits = ((1 << g.n) - 1) & ~excluded
    return sum((g.adj[v] & i_bits).bit_count() for v in iter_bits(r_bits))


def monte_carlo_e(
    g: Graph, i_set: VertexSet, sched: ParamSchedule, trials: int, seed: int
) -> McEstimate:
    """Sample I_j `trials` times and measure e each time.

    Per-trial seeds are derived from the master seed, and samples keep
    trial order, so the aggregate is identical no matter how many
    workers HITLAB_THREADS grants.
    """
    if trials < 1:
        raise PreconditionError(f"need at least one trial, got {trials}")
    _, s_j = bin_and_select(g, i_set, sched)
    base = i_set.bits | s_j.bits

    def one(idx: int) -> int:
        i_j = sample_Ij(i_set, sched.k, derive_seed(seed, idx, "mc-e"))
        k_set = build_K(g, i_j, sched.s, sched.t)
        return _residual_edge_count(g, i_set.bits, base | k_set.bits)

    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            samples = list(pool.map(one, range(trials)))
    else:
        samples = [one(idx) for idx in range(trials)]
    mean = sum(samples) / trials
    std_error = statistics.stdev(samples) / math.sqrt(trials) if trials > 1 else 0.0
    return McEstimate(mean=mean, std_error=std_error, samples=tuple(samples))


def expected_residual_edges(g: Graph, i_set: VertexSet, sched: ParamSchedule) -> Fraction:
    """Exact E[e] over the I_j sample: each outside vertex contributes
    its I-degree weighted by its hypergeometric escape probability."""
    _, s_j = bin_and_select(g, i_set, sched)
    outside = ((1 << g.n) - 1) & ~(i_set.bits | s_j.bits)
    total = Fraction(0)
    for v in iter_bits(outside):
        d = (g.adj[v] & i_set.bits).bit_count()
        total += hypergeom_tail(i_set.size, d, sched.k, sched.s) * d
    return total


# ---------------------------------------------------------------------------
# experiment harness


@dataclass
class ExperimentRecord:
    """One CSV row plus bookkeeping that stays out of the CSV."""

    family: str
    n: int
    seed: int
    alpha: Optional[int] = None
    h_exact: Optional[int] = None
    t_bet: Optional[int] = None
    t_trivial: Optional[int] = None
    e_observed: Optional[int] = None
    runtime_ms: dict = field(default_factory=dict)
    mode: Optional[str] = None
    verified: Optional[bool] = None
    error: Optional[str] = None


@dataclass(frozen=True)
class ExperimentConfig:
    families: tuple[dict, ...]
    n_values: tuple[int, ...]
    seeds: tuple[int, ...]
    schedule: dict
    caps: dict


_DEFAULT_CAPS = {"minhit_n": 24, "enum_n": 48}
_FAMILY_KINDS = ("cluster", "gnp", "c4free", "path", "cycle")


def load_config(source) -> ExperimentConfig:
    """Accepts a JSON file path or an already-decoded dict."""
    if isinstance(source, dict):
        raw = source
    else:
        try:
            with open(source, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
        except OSError as ex:
            raise ConfigError(f"cannot read config: {ex}") from None
        except json.JSONDecodeError as ex:
            raise ConfigError(f"config is not valid JSON: {ex}") from None
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    families = raw.get("families", [])
    if not isinstance(families, list) or not all(isinstance(f, dict) for f in families):
        raise ConfigError("families must be a list of objects")
    for f in families:
        if f.get("kind") not in _FAMILY_KINDS:
            raise ConfigError(f"unknown family kind {f.get('kind')!r}")
    schedule = raw.get("schedule", {"mode": "auto", "s": 2, "t": 2, "k": 2})
    if not isinstance(schedule, dict):
        raise ConfigError("schedule must be an object")
    caps = dict(_DEFAULT_CAPS)
    caps.update(raw.get("caps", {}))
    return ExperimentConfig(
        families=tuple(families),
        n_values=tuple(int(n) for n in raw.get("n_values", [])),
        seeds=tuple(int(s) for s in raw.get("seeds", [])),
        schedule=dict(schedule),
        caps=caps,
    )


def _family_builder(family: dict) -> tuple[str, Optional[int], Callable[[int, int], Graph]]:
    """(label, fixed_n or None, builder(n, seed))."""
    kind = family["kind"]
    if kind == "cluster":
        if "sizes" in family:
            sizes = [int(q) for q in family["sizes"]]
            label = "cluster:" + "+".join(str(q) for q in sizes)
            return label, sum(sizes), lambda n, seed: gen_cluster(sizes)
        q = int(family.get("q", 0))
        if q < 1:
            raise ConfigError("cluster family needs sizes or q >= 1")
        return f"cluster:q{q}", None, lambda n, seed: gen_cluster([q] * max(1, n // q))
    if kind == "gnp":
        p = float(family.get("p", -1.0))
        if not 0.0 <= p <= 1.0:
            raise ConfigError("gnp family needs p in [0,1]")
        return f"gnp:{p}", None, lambda n, seed: gen_gnp(n, p, seed)
    if kind == "c4free":
        m_frac = float(family.get("m_frac", -1.0))
        if not 0.0 <= m_frac <= 1.0:
            raise ConfigError("c4free family needs m_frac in [0,1]")
        return (
            f"c4free:{m_frac}",
            None,
            lambda n, seed: gen_c4_free_process(n, round(m_frac * n * (n - 1) / 2), seed),
        )
    if kind == "path":
        return "path", None, lambda n, seed: gen_path(n)
    if kind == "cycle":
        return "cycle", None, lambda n, seed: gen_cycle(n)
    raise ConfigError(f"unknown family kind {kind!r}")


def resolve_schedule(g: Graph, raw: dict) -> ParamSchedule:
    """Concrete ParamSchedule for one graph from the config stanza.

    mode explicit: bins given as [lo, hi] pairs.  mode auto: unit bins
    from auto_bins, delta defaulting to (min_deg + 0.5)/n so the run
    stays on the sampled-core branch.  mode asymptotic: the textbook
    point (construction will refuse it).
    """
    mode = raw.get("mode", "explicit")
    s = int(raw.get("s", 2))
    t = int(raw.get("t", 2))
    if mode == "asymptotic":
        return asymptotic_schedule(g.n, s, t, float(raw.get("delta", 0.5)))
    k = int(raw.get("k", 2))
    if mode == "auto":
        if "delta" in raw:
            delta = float(raw["delta"])
        else:
            _, d = min_degree_vertex(g)
            delta = (d + 0.5) / g.n
        return ParamSchedule(s=s, t=t, delta=delta, k=k, bins=auto_bins(delta))
    if mode != "explicit":
        raise ConfigError(f"unknown schedule mode {mode!r}")
    try:
        bins = tuple((float(lo), float(hi)) for lo, hi in raw.get("bins", []))
    except (TypeError, ValueError):
        raise ConfigError("explicit schedule needs bins as [lo, hi] pairs") from None
    return ParamSchedule(s=s, t=t, delta=float(raw.get("delta", 0.5)), k=k, bins=bins)


def _run_cell(label, builder, n, seed, schedule_raw, caps) -> ExperimentRecord:
    rec = ExperimentRecord(family=label, n=n, seed=seed)
    times = rec.runtime_ms

    def clock(stage, fn):
        t0 = time.perf_counter()
        out = fn()
        times[stage] = (time.perf_counter() - t0) * 1000.0
        return out

    try:
        g = clock("gen", lambda: builder(n, seed))
        rec.n = g.n
        s = int(schedule_raw.get("s", 2))
        t = int(schedule_raw.get("t", 2))
        witness = clock("freeness", lambda: find_induced_kst(g, s, t))
        if witness is not None:
            rec.error = f"not induced-K_{{{s},{t}}}-free: {witness.side_a}/{witness.side_b}"
            return rec
        _, d = min_degree_vertex(g)
        rec.t_trivial = d + 1
        enum_cap = int(caps["enum_n"])
        if g.n <= enum_cap:
            rec.alpha = clock("alpha", lambda: alpha_with_witness(g))[0]
        sched = resolve_schedule(g, schedule_raw)
        cert = clock("construct", lambda: construct_hitting_set(g, sched, seed))
        rec.mode = cert.mode
        rec.t_bet = cert.T.size
        if cert.mode == MODE_SAMPLED_CORE:
            rec.e_observed = residual_edges(g, cert)
        if g.n <= enum_cap:
            rec.verified = clock("verify", lambda: verify_hitting_set(g, cert.T, cap=enum_cap))
            if not rec.verified:
                raise VerificationFailure(
                    "hitting set failed verification\n" + certificate_to_text(cert)
                )
        if g.n <= int(caps["minhit_n"]):
            rec.h_exact = clock("minhit", lambda: min_hitting_set(g, cap=enum_cap))[0]
    except VerificationFailure:
        raise
    except HitlabError as ex:
        rec.error = f"{ex.kind}: {ex}"
    return rec


def run_experiment(config: ExperimentConfig) -> list[ExperimentRecord]:
    """One record per (family, n, seed) cell, in deterministic cell order.

    Cells run concurrently up to HITLAB_THREADS but are collected in
    index order.  Per-cell failures are recorded; a verification failure
    aborts the whole run with the offending certificate in the message.
    """
    cells = []
    for family in config.families:
        label, fixed_n, builder = _family_builder(family)
        n_list = [fixed_n] if fixed_n is not None else list(config.n_values)
        for n in n_list:
            for seed in config.seeds:
                cells.append((label, builder, n, seed))
    runner = lambda cell: _run_cell(cell[0], cell[1], cell[2], cell[3], config.schedule, config.caps)
    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(runner, cells))
    return [runner(cell) for cell in cells]


def _cell_text(v) -> str:
    return "" if v is None else str(v)


def records_to_csv(records: list[ExperimentRecord], include_timings: bool = False) -> str:
    """Fixed-schema CSV; runtime_ms stays blank unless include_timings,
    keeping default output byte-identical across runs."""
    lines = [CSV_HEADER]
    for r in records:
        runtime = str(int(round(sum(r.runtime_ms.values())))) if include_timings else ""
        lines.append(
            ",".join(
                [
                    CSV_SCHEMA,
                    r.family,
                    str(r.n),
                    str(r.seed),
                    _cell_text(r.alpha),
                    _cell_text(r.h_exact),
                    _cell_text(r.t_bet),
                    _cell_text(r.t_trivial),
                    _cell_text(r.e_observed),
                    runtime,
                ]
            )
        )
    return "\n".join(lines) + "\n"
