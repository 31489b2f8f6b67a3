"""Single-site Metropolis Glauber dynamics for the shadow-weighted measure.

Randomness comes from numpy's ``PCG64`` bit generator. A chain seeded with the
integer ``seed`` uses ``Generator(PCG64(seed))``; independent chains derive their
seeds from ``SeedSequence(seed).spawn(k)``. Each sweep draws its ``n`` vertex
choices (``integers(0, n, n)``) and then its ``n`` uniforms (``random(n)``).

The chain is lazy: a step with uniform ``u >= 1/2`` holds, otherwise it is a
Metropolis proposal accepted when ``2u`` falls below the acceptance probability.
Without the hold a sweep of ``n`` always-accepted flips would preserve the
parity of ``|I|`` and the sweep-sampled chain would be periodic.
"""

from __future__ import annotations

import csv
import math
from collections import Counter
from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import NotIndependent
from .exact import DistributionTable
from .hypergraph import Hypergraph, SubsetLike, VertexSubset, as_subset, bits_of, is_independent_mask, shadow_counts
from .measure import MeasureParams, _log_weight_counts, x_per_vertex_mask

HOLD = 0.5


@dataclass(frozen=True)
class ChainConfig:
    burn_in: int = 100
    samples: int = 1000
    thinning: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.burn_in < 0 or self.samples < 0:
            raise ValueError("burn_in and samples must be nonnegative")
        if self.thinning < 1:
            raise ValueError("thinning must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


class GlauberChain:
    """Precomputed move tables for one hypergraph and parameter set."""

    def __init__(self, H: Hypergraph, params: MeasureParams):
        if params.r != H.r:
            raise ValueError(f"params are for r={params.r}, hypergraph has r={H.r}")
        self.H = H
        self.params = params
        self.links = H.link_masks
        self.log_beta = params.log_beta
        self.linear = H.sparsity.linear
        # for linear H the new shadow sets from distinct edges at v never coincide,
        # so the insertion delta depends only on |link ∩ I| per edge
        self._per_edge = [
            math.fsum(math.comb(t, j) * params.log_beta[j + 1] for j in range(1, t + 1)) for t in range(H.r)
        ]

    def insertion_delta(self, I: int, v: int) -> float | None:
        """Change of log-weight when ``v`` (not in ``I``) is added; ``None`` if that completes an edge."""
        if self.linear:
            total = 0.0
            for link in self.links[v]:
                t = (link & I).bit_count()
                if t == self.H.r:
                    return None
                total += self._per_edge[t]
            return total
        new_sets: set[int] = set()
        for link in self.links[v]:
            t = link & I
            if t == link:
                return None
            sub = t
            while sub:
                new_sets.add(sub)
                sub = (sub - 1) & t
        lb = self.log_beta
        return math.fsum(lb[s.bit_count() + 1] for s in new_sets)

    def move(self, I: int, v: int) -> tuple[int, float]:
        """Proposed state for site ``v`` and its acceptance probability."""
        bit = 1 << v
        if I & bit:
            delta = -self.insertion_delta(I ^ bit, v)
            return I ^ bit, 1.0 if delta >= 0 else math.exp(delta)
        delta = self.insertion_delta(I, v)
        if delta is None:
            return I, 0.0
        return I | bit, 1.0 if delta >= 0 else math.exp(delta)

    def sweep(self, I: int, rng: np.random.Generator, debug: bool = False) -> tuple[int, int, int]:
        """``n`` lazy steps; returns the new state, accepted moves and proposals made."""
        n = self.H.n
        sites = rng.integers(0, n, size=n)
        uniforms = rng.random(n)
        accepted = proposed = 0
        for v, u in zip(sites.tolist(), uniforms.tolist()):
            if u >= HOLD:
                continue
            proposed += 1
            J, a = self.move(I, v)
            if J != I and u < HOLD * a:
                I = J
                accepted += 1
                if debug and not is_independent_mask(self.H, I):
                    raise AssertionError(f"chain left the independent sets at {bits_of(I)}")
        return I, accepted, proposed


def glauber_step(
    H: Hypergraph, params: MeasureParams, state: SubsetLike, rng: np.random.Generator
) -> VertexSubset:
    """One lazy Metropolis update at a uniformly chosen vertex."""
    sub = as_subset(H, state)
    if not is_independent_mask(H, sub.bits):
        raise NotIndependent(f"chain state {sub.vertices()} contains an edge")
    if H.n == 0:
        return sub
    chain = GlauberChain(H, params)
    v = int(rng.integers(0, H.n))
    u = float(rng.random())
    J, a = chain.move(sub.bits, v)
    return VertexSubset(J, H.n) if u < HOLD * a else sub


@dataclass(frozen=True)
class Estimate:
    mean: float
    se: float

    def to_dict(self) -> dict:
        return {"mean": self.mean, "se": self.se}


@dataclass(frozen=True)
class SampleReport:
    est_size: Estimate
    est_x: Estimate
    est_z: Estimate
    est_marginals: tuple[float, ...]
    est_shadow: tuple[float, ...]
    acceptance_rate: float
    samples: int
    frequencies: dict[int, float] = field(repr=False, compare=True)

    def to_dict(self) -> dict:
        return {
            "est_size": self.est_size.to_dict(),
            "est_x": self.est_x.to_dict(),
            "est_z": self.est_z.to_dict(),
            "est_marginals": {str(v): p for v, p in enumerate(self.est_marginals)},
            "est_shadow": list(self.est_shadow),
            "acceptance_rate": self.acceptance_rate,
            "samples": self.samples,
            "distinct_states": len(self.frequencies),
        }


def _batch_means(values: list[float], batches: int = 20) -> Estimate:
    n = len(values)
    if n == 0:
        return Estimate(float("nan"), float("nan"))
    arr = np.asarray(values, dtype=float)
    mean = float(arr.mean())
    if n < 2 * batches:
        se = float(arr.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
        return Estimate(mean, se)
    size = n // batches
    bm = arr[: size * batches].reshape(batches, size).mean(axis=1)
    return Estimate(mean, float(bm.std(ddof=1) / math.sqrt(batches)))


def _simulate(
    H: Hypergraph, params: MeasureParams, config: ChainConfig, initial: int, debug: bool
) -> tuple[list[int], int, int]:
    chain = GlauberChain(H, params)
    rng = np.random.Generator(np.random.PCG64(config.seed))
    I = initial
    accepted = proposals = 0
    if H.n == 0:
        return [0] * config.samples, 0, 0
    for _ in range(config.burn_in):
        I, a, p = chain.sweep(I, rng, debug)
        accepted += a
        proposals += p
    states = []
    for _ in range(config.samples):
        for _ in range(config.thinning):
            I, a, p = chain.sweep(I, rng, debug)
            accepted += a
            proposals += p
        states.append(I)
    return states, accepted, proposals


def _summarize(
    H: Hypergraph, params: MeasureParams, states: list[int], accepted: int, proposals: int
) -> SampleReport:
    memo: dict[int, tuple[int, float, float, tuple[int, ...]]] = {}
    for s in set(states):
        counts = shadow_counts(H, s)
        memo[s] = (
            s.bit_count(),
            math.fsum(x_per_vertex_mask(H, params, s)),
            -_log_weight_counts(params.log_beta, counts) + 0.0,
            counts,
        )
    total = len(states)
    freq = Counter(states)
    marg = [0.0] * H.n
    shadow = [0.0] * H.r
    for s, c in sorted(freq.items()):
        for v in bits_of(s):
            marg[v] += c
        for k, cnt in enumerate(memo[s][3]):
            shadow[k] += c * cnt
    denom = max(total, 1)
    return SampleReport(
        est_size=_batch_means([memo[s][0] for s in states]),
        est_x=_batch_means([memo[s][1] for s in states]),
        est_z=_batch_means([memo[s][2] for s in states]),
        est_marginals=tuple(m / denom for m in marg),
        est_shadow=tuple(x / denom for x in shadow),
        acceptance_rate=accepted / proposals if proposals else 0.0,
        samples=total,
        frequencies={s: c / denom for s, c in sorted(freq.items())},
    )


def run_chain(
    H: Hypergraph,
    params: MeasureParams,
    config: ChainConfig,
    initial: SubsetLike | None = None,
    debug: bool = False,
    trace_path=None,
) -> SampleReport:
    """Burn in, then record ``samples`` states ``thinning`` sweeps apart (a sweep is ``n`` steps)."""
    start = as_subset(H, initial if initial is not None else 0).bits
    if not is_independent_mask(H, start):
        raise NotIndependent(f"initial state {bits_of(start)} contains an edge")
    states, accepted, proposals = _simulate(H, params, config, start, debug)
    if trace_path is not None:
        write_trace(H, params, states, trace_path)
    return _summarize(H, params, states, accepted, proposals)


def write_trace(H: Hypergraph, params: MeasureParams, states: list[int], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["step", "bitmask", "z"])
        for i, s in enumerate(states):
            z = -_log_weight_counts(params.log_beta, shadow_counts(H, s)) + 0.0
            w.writerow([i, s, repr(z)])


def chain_seeds(seed: int, chains: int) -> list[int]:
    children = np.random.SeedSequence(seed).spawn(chains)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]


def _chain_job(args) -> tuple[list[int], int, int]:
    H, params, config = args
    return _simulate(H, params, config, 0, False)


def run_chains(
    H: Hypergraph, params: MeasureParams, config: ChainConfig, chains: int = 1, workers: int = 1
) -> SampleReport:
    """Independent chains from ``∅`` with spawned seeds, pooled in chain order."""
    if chains <= 1:
        return run_chain(H, params, config)
    configs = [
        ChainConfig(config.burn_in, config.samples, config.thinning, s) for s in chain_seeds(config.seed, chains)
    ]
    jobs = [(H, params, c) for c in configs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chain_job, jobs))
    else:
        results = [_chain_job(j) for j in jobs]
    states = [s for res in results for s in res[0]]
    return _summarize(H, params, states, sum(r[1] for r in results), sum(r[2] for r in results))


def _as_freq(dist: Mapping | DistributionTable) -> dict[int, float]:
    if isinstance(dist, DistributionTable):
        return dist.probabilities()
    return {(k.bits if isinstance(k, VertexSubset) else int(k)): float(p) for k, p in dist.items()}


def tv_distance(empirical: Mapping | DistributionTable, exact: Mapping | DistributionTable) -> float:
    """Half the l1 distance; states missing from either side count as probability 0."""
    p, q = _as_freq(empirical), _as_freq(exact)
    return 0.5 * math.fsum(abs(p.get(s, 0.0) - q.get(s, 0.0)) for s in p.keys() | q.keys())


def kernel_invariance_deviation(H: Hypergraph, params: MeasureParams, table: DistributionTable) -> float:
    """``sum_I |(pi K)(I) - pi(I)|`` for the exact one-step lazy kernel ``K`` of the chain.

    ``K`` is assembled from the same move rule the chain runs, so this checks the
    incremental weight updates as well as detailed balance.
    """
    chain = GlauberChain(H, params)
    pi = table.probabilities()
    out: dict[int, list[float]] = {s: [] for s in pi}
    n = H.n
    for s, p in pi.items():
        stay = 1.0
        for v in range(n):
            J, a = chain.move(s, v)
            if J != s and a > 0:
                step = HOLD * a / n
                out.setdefault(J, []).append(p * step)
                stay -= step
        out[s].append(p * stay)
    return math.fsum(abs(math.fsum(parts) - pi.get(s, 0.0)) for s, parts in out.items())
