"""Parameters, log-weights and the X statistic of the shadow-weighted measure.

For an independent set ``I`` the unnormalized weight is
``prod_{k=2..r} beta_k ** |∂_k I|``; everything here works with its natural log.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, replace

from .errors import DegenerateDegree, DegreeMismatch, DimensionMismatch, NotIndependent, UnsupportedOrder
from .hypergraph import (
    Hypergraph,
    ShadowProfile,
    SubsetLike,
    as_subset,
    bits_of,
    is_independent_mask,
    k_submasks,
    shadow_counts,
)

NEG_INF = float("-inf")


@dataclass(frozen=True)
class MeasureParams:
    r: int
    d: float
    alpha: float
    delta: float
    log_beta: tuple[float, ...]  # indices 0..r+1; log_beta[r+1] == -inf

    @property
    def beta(self) -> tuple[float, ...]:
        return tuple(math.exp(b) for b in self.log_beta)

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "d": self.d,
            "alpha": self.alpha,
            "delta": self.delta,
            "log_beta": [None if b == NEG_INF else b for b in self.log_beta],
        }


def derive_params(r: int, d: float) -> MeasureParams:
    """Compute ``alpha``, ``delta`` and ``log beta_0..log beta_{r+1}`` for order ``r`` and degree ``d``."""
    if r < 2:
        raise UnsupportedOrder(f"r={r}: delta needs r >= 2 (use the graph bounds for r = 1)")
    if not d >= 2:
        raise DegenerateDegree(f"d={d}: the measure needs d >= 2")
    log_d = math.log(d)
    alpha = (log_d / d) ** (1.0 / r)
    # positive real root of delta^r = alpha^r / (r^2 (r-1)); alpha^r is log(d)/d exactly
    delta = (log_d / d / (r * r * (r - 1))) ** (1.0 / r)
    log_beta = [0.0, 0.0]
    for k in range(2, r + 1):
        j = r - k + 1
        log_beta.append(-j * delta**j)
    log_beta.append(NEG_INF)
    return MeasureParams(r, float(d), alpha, delta, tuple(log_beta))


def with_log_beta(params: MeasureParams, log_beta: Sequence[float]) -> MeasureParams:
    """Copy of ``params`` with overridden ``log beta`` (indices 0..r+1, last must be -inf)."""
    lb = tuple(float(b) for b in log_beta)
    if len(lb) != params.r + 2:
        raise DimensionMismatch(f"need {params.r + 2} log-beta entries, got {len(lb)}")
    if lb[0] != 0 or lb[1] != 0 or lb[-1] != NEG_INF:
        raise ValueError("log beta_0 = log beta_1 = 0 and log beta_{r+1} = -inf are fixed")
    return replace(params, log_beta=lb)


def uniform_limit(params: MeasureParams) -> MeasureParams:
    """All ``beta_k = 1`` for ``k <= r``: the uniform measure on independent sets."""
    return with_log_beta(params, [0.0] * (params.r + 1) + [NEG_INF])


def _log_weight_counts(log_beta: Sequence[float], counts: Sequence[int]) -> float:
    return math.fsum(counts[k - 1] * log_beta[k] for k in range(2, len(counts) + 1) if counts[k - 1])


def log_weight(params: MeasureParams, profile: ShadowProfile | Sequence[int]) -> float:
    counts = profile.counts if isinstance(profile, ShadowProfile) else tuple(profile)
    if len(counts) != params.r:
        raise DimensionMismatch(f"profile has {len(counts)} entries, params expect r={params.r}")
    return _log_weight_counts(params.log_beta, counts)


@dataclass(frozen=True)
class MeasureEvaluation:
    log_weight: float
    z: float
    x_total: float
    x_per_vertex: tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "log_weight": self.log_weight,
            "z": self.z,
            "x_total": self.x_total,
            "x_per_vertex": {str(v): x for v, x in enumerate(self.x_per_vertex)},
        }


def link_shadow_counts(H: Hypergraph, v: int, I: int) -> list[int]:
    """``|N_k(v) ∩ ∂_k I|`` for ``k = 1..r``, for a vertex ``v`` outside ``I``."""
    seen: list[set[int]] = [set() for _ in range(H.r)]
    for link in H.link_masks[v]:
        t = link & I
        c = t.bit_count()
        for k in range(1, min(c, H.r) + 1):
            seen[k - 1].update(k_submasks(t, k))
    return [len(s) for s in seen]


def x_per_vertex_mask(H: Hypergraph, params: MeasureParams, I: int) -> list[float]:
    r = H.r
    top = params.d ** (1.0 / r)
    coeff = [params.delta ** (r - k) for k in range(1, r + 1)]
    out = []
    for v in range(H.n):
        if I >> v & 1:
            out.append(top)
        elif not H.neighbor_masks[v] & I:
            out.append(0.0)
        else:
            counts = link_shadow_counts(H, v, I)
            out.append(math.fsum(c * n for c, n in zip(coeff, counts)))
    return out


def x_value(H: Hypergraph, params: MeasureParams, I: SubsetLike) -> MeasureEvaluation:
    """``X_v`` for every vertex, their total, the log-weight and ``Z = -log-weight``."""
    if params.r != H.r:
        raise DimensionMismatch(f"params are for r={params.r}, hypergraph has r={H.r}")
    mask = as_subset(H, I).bits
    if not is_independent_mask(H, mask):
        raise NotIndependent(f"{bits_of(mask)} contains an edge")
    xs = x_per_vertex_mask(H, params, mask)
    lw = _log_weight_counts(params.log_beta, shadow_counts(H, mask))
    return MeasureEvaluation(lw, -lw + 0.0, math.fsum(xs), tuple(xs))


def claim1_rhs(params: MeasureParams, size: int, z: float) -> float:
    r, d, delta = params.r, params.d, params.delta
    return (d ** (1.0 / r) + math.log(d) / (delta * r * (r - 1))) * size + z / delta


def claim1_bound(H: Hypergraph, params: MeasureParams, I: SubsetLike) -> tuple[float, float]:
    """Both sides of ``X <= (d^(1/r) + log d / (delta r (r-1))) |I| + Z / delta``.

    ``params.d`` must be at least the maximum degree of ``H``.
    """
    if params.d < H.max_degree:
        raise DegreeMismatch(f"params.d={params.d} is below the maximum degree {H.max_degree}")
    ev = x_value(H, params, I)
    size = as_subset(H, I).size
    return ev.x_total, claim1_rhs(params, size, ev.z)
