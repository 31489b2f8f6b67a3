"""Exhaustive oracles over all independent sets of a small hypergraph.

Everything here enumerates ``I(H)`` explicitly, so it is exponential in ``n``
and guarded by a vertex cap (default 24).
"""

from __future__ import annotations

import csv
import math
import os
from collections import defaultdict
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    CapExceeded,
    DegreeMismatch,
    EmptyConditional,
    NotLinear,
    NotLocallySparse,
    UnrealizableConditional,
)
from .hypergraph import (
    Hypergraph,
    SubsetLike,
    VertexSubset,
    as_subset,
    bits_of,
    is_independent_mask,
    shadow_counts,
)
from .measure import (
    NEG_INF,
    MeasureParams,
    _log_weight_counts,
    claim1_rhs,
    link_shadow_counts,
    x_per_vertex_mask,
)

DEFAULT_CAP = 24


def logsumexp(values: Sequence[float]) -> float:
    top = max(values, default=NEG_INF)
    if top == NEG_INF:
        return NEG_INF
    return top + math.log(math.fsum(math.exp(v - top) for v in values))


def _check_cap(H: Hypergraph, cap: int | None) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if H.n > limit:
        raise CapExceeded(f"n={H.n} exceeds the enumeration cap {limit}")


def _edges_by_min_vertex(H: Hypergraph) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(H.n)]
    for e, em in zip(H.edges, H.edge_masks):
        out[e[0]].append(em)
    return out


def _enumerate_masks(H: Hypergraph, forced: dict[int, bool] | None = None) -> Iterator[int]:
    """Independent sets as masks in increasing integer order.

    Vertices are decided from ``n-1`` down to ``0``, excluding before including;
    an edge is checked when its smallest vertex is decided. ``forced`` pins the
    membership of some vertices (used to split the work into partitions).
    """
    closing = _edges_by_min_vertex(H)
    forced = forced or {}

    def rec(u: int, I: int) -> Iterator[int]:
        if u < 0:
            yield I
            return
        pin = forced.get(u)
        if pin is not True:
            yield from rec(u - 1, I)
        if pin is not False:
            J = I | (1 << u)
            for em in closing[u]:
                if em & J == em:
                    return
            yield from rec(u - 1, J)

    yield from rec(H.n - 1, 0)


def enumerate_independent_sets(H: Hypergraph, cap: int | None = None) -> Iterator[VertexSubset]:
    """Every independent set of ``H`` exactly once, ordered by bitmask value (``∅`` first)."""
    _check_cap(H, cap)
    for mask in _enumerate_masks(H):
        yield VertexSubset(mask, H.n)


def count_independent_sets(H: Hypergraph, cap: int | None = None) -> int:
    _check_cap(H, cap)
    return sum(1 for _ in _enumerate_masks(H))


def _partition_patterns(H: Hypergraph, workers: int) -> list[dict[int, bool]]:
    top = min(H.n, max(1, (4 * workers - 1).bit_length()))
    verts = list(range(H.n - 1, H.n - 1 - top, -1))
    patterns = []
    # increasing order of the pinned high bits keeps the concatenation globally sorted
    for code in range(1 << top):
        patterns.append({v: bool(code >> (H.n - 1 - v) & 1) for v in verts})
    patterns.sort(key=lambda p: sum(1 << v for v, on in p.items() if on))
    return patterns


def _partition_worker(args: tuple[Hypergraph, dict[int, bool], tuple[float, ...]]) -> list[tuple[int, float]]:
    H, forced, log_beta = args
    return [(I, _log_weight_counts(log_beta, shadow_counts(H, I))) for I in _enumerate_masks(H, forced)]


def _weighted_masks(H: Hypergraph, params: MeasureParams, workers: int) -> list[tuple[int, float]]:
    if workers <= 1 or H.n < 8:
        return _partition_worker((H, {}, params.log_beta))
    jobs = [(H, p, params.log_beta) for p in _partition_patterns(H, workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_partition_worker, jobs))
    return [item for part in parts for item in part]


def default_workers() -> int:
    env = os.environ.get("HYPERIND_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


# -- the exact measure -------------------------------------------------------


@dataclass(frozen=True)
class DistributionTable:
    n: int
    masks: tuple[int, ...]
    log_weights: tuple[float, ...]
    log_partition: float
    log_prob: tuple[float, ...]

    @property
    def support(self) -> tuple[VertexSubset, ...]:
        return tuple(VertexSubset(m, self.n) for m in self.masks)

    def probabilities(self) -> dict[int, float]:
        return {m: math.exp(lp) for m, lp in zip(self.masks, self.log_prob)}

    def prob(self, I: VertexSubset | int) -> float:
        mask = I.bits if isinstance(I, VertexSubset) else I
        try:
            return math.exp(self.log_prob[self._index[mask]])
        except KeyError:
            return 0.0

    @property
    def _index(self) -> dict[int, int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {m: i for i, m in enumerate(self.masks)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["bitmask", "log_prob"])
            for m, lp in zip(self.masks, self.log_prob):
                w.writerow([m, repr(lp)])

    def summary(self) -> dict:
        top = max(range(len(self.masks)), key=lambda i: self.log_prob[i])
        return {
            "support_size": len(self.masks),
            "log_partition": self.log_partition,
            "mode": bits_of(self.masks[top]),
            "mode_prob": math.exp(self.log_prob[top]),
        }


def exact_distribution(
    H: Hypergraph, params: MeasureParams, cap: int | None = None, workers: int = 1
) -> DistributionTable:
    """The normalized measure on ``I(H)``, computed by full enumeration in log space."""
    _check_cap(H, cap)
    rows = _weighted_masks(H, params, workers)
    masks = tuple(m for m, _ in rows)
    lw = tuple(w for _, w in rows)
    logz = logsumexp(lw)
    return DistributionTable(H.n, masks, lw, logz, tuple(w - logz for w in lw))


# -- independence number -----------------------------------------------------


def _greedy_mask(H: Hypergraph, order: Sequence[int]) -> int:
    I = 0
    for v in order:
        J = I | (1 << v)
        if all(H.edge_masks[ei] & J != H.edge_masks[ei] for ei in H.incidence[v]):
            I = J
    return I


def independence_number(H: Hypergraph, cap: int | None = 64) -> tuple[int, VertexSubset]:
    """Exact ``alpha(H)`` with a witness, by branch and bound.

    Vertices are branched in decreasing-degree order, include-branch first; the
    incumbent starts from a min-degree greedy pass.
    """
    _check_cap(H, cap)
    n = H.n
    order = sorted(range(n), key=lambda v: (-H.degrees[v], v))
    pos = {v: i for i, v in enumerate(order)}
    # an edge can be completed only when its last vertex in branching order is included
    closing: list[list[int]] = [[] for _ in range(n)]
    for e, em in zip(H.edges, H.edge_masks):
        closing[max(pos[v] for v in e)].append(em)

    best_mask = _greedy_mask(H, sorted(range(n), key=lambda v: (H.degrees[v], v)))
    best = best_mask.bit_count()

    def rec(i: int, I: int, size: int) -> None:
        nonlocal best, best_mask
        if size + (n - i) <= best:
            return
        if i == n:
            best, best_mask = size, I
            return
        J = I | (1 << order[i])
        if all(em & J != em for em in closing[i]):
            rec(i + 1, J, size + 1)
        rec(i + 1, I, size)

    rec(0, 0, 0)
    return best, VertexSubset(best_mask, n)


# -- expectations ------------------------------------------------------------


@dataclass(frozen=True)
class ExpectationReport:
    mean_x: float
    mean_z: float
    mean_size: float
    mean_shadow: tuple[float, ...]
    marginals: tuple[float, ...]
    mean_x_per_vertex: tuple[float, ...]
    alpha: int
    claim2_ratio: float | None
    claim5_ratio_min: float | None
    claim5_ratio_mean: float | None

    def to_dict(self) -> dict:
        return {
            "mean_x": self.mean_x,
            "mean_z": self.mean_z,
            "mean_size": self.mean_size,
            "mean_shadow": list(self.mean_shadow),
            "marginals": {str(v): p for v, p in enumerate(self.marginals)},
            "alpha": self.alpha,
            "claim2_ratio": self.claim2_ratio,
            "claim5_ratio_min": self.claim5_ratio_min,
            "claim5_ratio_mean": self.claim5_ratio_mean,
            "note": "claim ratios are report-only; the claims hold up to o_d(1) factors",
        }


def expectation_report(
    H: Hypergraph, params: MeasureParams, cap: int | None = None, table: DistributionTable | None = None
) -> ExpectationReport:
    """Exact ``E(X)``, ``E(Z)``, ``E|I|``, ``E|∂_k I|`` and marginals, with the Claim 2 / Claim 5 ratios.

    The Claim 2 ratio is ``E(X) delta (r-1) / (alpha(H) log d)`` and the Claim 5
    ratio is ``E(X_v) r^2 2^r / ((2^r - 1) log d)``; both tend to at most / at
    least 1 only as ``d`` grows, so they are reported, never asserted.
    """
    table = table or exact_distribution(H, params, cap)
    r, n = H.r, H.n
    probs = [math.exp(lp) for lp in table.log_prob]
    x_cols: list[list[float]] = [[] for _ in range(n)]
    marg: list[list[float]] = [[] for _ in range(n)]
    sizes, zs, shadow_cols = [], [], [[] for _ in range(r)]
    for mask, p, lw in zip(table.masks, probs, table.log_weights):
        xs = x_per_vertex_mask(H, params, mask)
        for v in range(n):
            x_cols[v].append(p * xs[v])
            if mask >> v & 1:
                marg[v].append(p)
        sizes.append(p * mask.bit_count())
        zs.append(-p * lw)
        for k, c in enumerate(shadow_counts(H, mask)):
            shadow_cols[k].append(p * c)
    mean_xv = tuple(math.fsum(col) for col in x_cols)
    mean_x = math.fsum(mean_xv)
    alpha, _ = independence_number(H)
    log_d = math.log(params.d)
    claim2 = mean_x * params.delta * (r - 1) / (alpha * log_d) if alpha and log_d > 0 else None
    scale = r * r * 2**r / ((2**r - 1) * log_d) if log_d > 0 else None
    c5 = [x * scale for x in mean_xv] if scale is not None and n else []
    return ExpectationReport(
        mean_x=mean_x,
        mean_z=math.fsum(zs) + 0.0,
        mean_size=math.fsum(sizes),
        mean_shadow=tuple(math.fsum(col) for col in shadow_cols),
        marginals=tuple(math.fsum(col) for col in marg),
        mean_x_per_vertex=mean_xv,
        alpha=alpha,
        claim2_ratio=claim2,
        claim5_ratio_min=min(c5) if c5 else None,
        claim5_ratio_mean=math.fsum(c5) / len(c5) if c5 else None,
    )


# -- Claim 1 sweep -----------------------------------------------------------


@dataclass(frozen=True)
class Claim1Sweep:
    checked: int
    violations: int
    max_violation: float  # max over I of lhs - rhs; <= 0 means the inequality held everywhere
    worst: VertexSubset | None


def claim1_sweep(H: Hypergraph, params: MeasureParams, tol: float = 1e-12, cap: int | None = None) -> Claim1Sweep:
    """Check ``X(I) <= rhs(I) + tol`` on every independent set."""
    if params.d < H.max_degree:
        raise DegreeMismatch(f"params.d={params.d} is below the maximum degree {H.max_degree}")
    _check_cap(H, cap)
    worst, worst_gap, bad, count = None, NEG_INF, 0, 0
    for mask in _enumerate_masks(H):
        lhs = math.fsum(x_per_vertex_mask(H, params, mask))
        z = -_log_weight_counts(params.log_beta, shadow_counts(H, mask))
        gap = lhs - claim1_rhs(params, mask.bit_count(), z)
        count += 1
        if gap > tol:
            bad += 1
        if gap > worst_gap:
            worst_gap, worst = gap, mask
    return Claim1Sweep(count, bad, worst_gap, None if worst is None else VertexSubset(worst, H.n))


# -- conditional structure at a vertex ---------------------------------------


@dataclass(frozen=True)
class SubsetTerm:
    """Log-weights attached to a subset ``S`` of one extendable set ``omega``.

    ``log_f`` is the weight the edge picks up from ``S`` alone, ``log_f_plus`` the
    weight of the same edge once ``v`` joins too, and ``log_v_factor`` their ratio
    (the factor contributed by shadow sets that contain ``v``).
    """

    subset: tuple[int, ...]
    log_beta_s: float
    log_f: float
    log_f_plus: float
    log_v_factor: float

    @property
    def beta_s(self) -> float:
        return math.exp(self.log_beta_s)

    @property
    def f(self) -> float:
        return math.exp(self.log_f)

    @property
    def f_plus(self) -> float:
        return math.exp(self.log_f_plus)


@dataclass(frozen=True)
class ClaimQuantities:
    v: int
    i_v: VertexSubset
    omega_family: tuple[tuple[int, ...], ...]
    edge_of_omega: tuple[int, ...]
    per_subset: tuple[tuple[SubsetTerm, ...], ...]
    log_w: tuple[float, ...]
    log_w_plus: tuple[float, ...]

    @property
    def w(self) -> tuple[float, ...]:
        return tuple(math.exp(x) for x in self.log_w)

    @property
    def w_plus(self) -> tuple[float, ...]:
        return tuple(math.exp(x) for x in self.log_w_plus)

    @property
    def log_odds(self) -> float:
        """``log prod_omega W / W+``: the predicted ``log Pr(v not in I) / Pr(v in I)``."""
        return math.fsum(a - b for a, b in zip(self.log_w, self.log_w_plus))

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "i_v": self.i_v.vertices(),
            "omega_family": [list(o) for o in self.omega_family],
            "w": list(self.w),
            "w_plus": list(self.w_plus),
            "subsets": [
                [
                    {"S": list(t.subset), "beta_S": t.beta_s, "f_S": t.f, "f_S_plus": t.f_plus}
                    for t in terms
                ]
                for terms in self.per_subset
            ],
        }


def _binom_log_sum(log_beta: Sequence[float], s: int, shift: int) -> float:
    """``sum_j C(s, j) log beta_{j+shift}`` over ``j = 0..s``."""
    terms = [math.comb(s, j) * log_beta[j + shift] for j in range(s + 1)]
    if NEG_INF in terms:
        return NEG_INF
    return math.fsum(terms)


def _require_locally_sparse(H: Hypergraph) -> None:
    if not H.sparsity.locally_sparse:
        raise NotLocallySparse("the conditional factorization needs a hypergraph without 2- or 3-cycles")


def _closed_neighborhood(H: Hypergraph, v: int) -> int:
    return H.neighbor_masks[v] | (1 << v)


def _extends(H: Hypergraph, I: int, x: int) -> bool:
    J = I | (1 << x)
    return all(H.edge_masks[ei] & J != H.edge_masks[ei] for ei in H.incidence[x])


def _conditional(H: Hypergraph, log_beta: Sequence[float], v: int, i_v: int) -> ClaimQuantities:
    r = H.r
    omegas, owners, per_subset, log_w, log_w_plus = [], [], [], [], []
    for ei in H.incidence[v]:
        link = H.edge_masks[ei] & ~(1 << v)
        omega = tuple(x for x in bits_of(link) if _extends(H, i_v, x))
        lb_x = {}
        for x in omega:
            counts = link_shadow_counts(H, x, i_v)
            lb_x[x] = math.fsum(counts[k - 1] * log_beta[k + 1] for k in range(1, r) if counts[k - 1])
        terms = []
        for s in range(len(omega) + 1):
            log_f = _binom_log_sum(log_beta, s, 0)
            log_inc = _binom_log_sum(log_beta, s, 1)
            # Pascal: subsets of S + {v} are those of S and those of S joined with v
            log_f_plus = log_f + log_inc
            for S in combinations(omega, s):
                terms.append(SubsetTerm(S, math.fsum(lb_x[x] for x in S), log_f, log_f_plus, log_inc))
        omegas.append(omega)
        owners.append(ei)
        per_subset.append(tuple(terms))
        log_w.append(logsumexp([t.log_beta_s + t.log_f for t in terms]))
        log_w_plus.append(logsumexp([t.log_beta_s + t.log_f_plus for t in terms]))
    return ClaimQuantities(
        v, VertexSubset(i_v, H.n), tuple(omegas), tuple(owners), tuple(per_subset), tuple(log_w), tuple(log_w_plus)
    )


def _check_conditioning(H: Hypergraph, v: int, i_v: int) -> None:
    if not 0 <= v < H.n:
        raise UnrealizableConditional(f"vertex {v} not in 0..{H.n - 1}")
    if i_v & _closed_neighborhood(H, v):
        raise UnrealizableConditional(f"I_v={bits_of(i_v)} meets N({v}) + {{{v}}}")
    if not is_independent_mask(H, i_v):
        raise UnrealizableConditional(f"I_v={bits_of(i_v)} is not independent")


def conditional_quantities(H: Hypergraph, params: MeasureParams, v: int, i_v: SubsetLike) -> ClaimQuantities:
    """The sets ``omega_e``, weights ``beta_S``, ``f_S``, ``f_S+`` and sums ``W``, ``W+`` at ``v`` given ``I_v``."""
    _require_locally_sparse(H)
    mask = as_subset(H, i_v).bits
    _check_conditioning(H, v, mask)
    return _conditional(H, params.log_beta, v, mask)


@dataclass(frozen=True)
class Claim3Result:
    lhs: float
    rhs: float
    gap: float


def _gap(lhs: float, rhs: float) -> float:
    if lhs == rhs:
        return 0.0
    return abs(lhs - rhs) / max(lhs, 1.0)


def verify_claim3(
    H: Hypergraph, params: MeasureParams, v: int, i_v: SubsetLike, cap: int | None = None
) -> Claim3Result:
    """Enumerated ``Pr(v not in I | I_v) / Pr(v in I | I_v)`` against ``prod W / W+``."""
    _require_locally_sparse(H)
    key = as_subset(H, i_v).bits
    _check_conditioning(H, v, key)
    table = exact_distribution(H, params, cap)
    outside = ~_closed_neighborhood(H, v)
    with_v, without_v = [], []
    for mask, lw in zip(table.masks, table.log_weights):
        if mask & outside == key:
            (with_v if mask >> v & 1 else without_v).append(lw)
    if not with_v:
        raise EmptyConditional(f"no independent set realizes I_v={bits_of(key)} with {v} in I")
    lhs = math.exp(logsumexp(without_v) - logsumexp(with_v))
    rhs = math.exp(_conditional(H, params.log_beta, v, key).log_odds)
    return Claim3Result(lhs, rhs, _gap(lhs, rhs))


@dataclass
class Claim3Sweep:
    checked: int = 0
    empty: int = 0
    max_gap: float = 0.0
    worst: tuple[int, tuple[int, ...]] | None = None
    claim4_max_ratio: float = 0.0  # max W/W+ over all (v, I_v, omega); compare with 1 + 1/(2^r - 1)
    slice_mass_error: float = 0.0  # max over v of |sum of slice probabilities - 1|
    records: list[tuple[int, tuple[int, ...], float, float, float]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "empty_conditionals": self.empty,
            "max_gap": self.max_gap,
            "worst": None if self.worst is None else {"v": self.worst[0], "i_v": list(self.worst[1])},
            "claim4_max_ratio": self.claim4_max_ratio,
            "slice_mass_error": self.slice_mass_error,
        }


def claim3_sweep(
    H: Hypergraph,
    params: MeasureParams,
    cap: int | None = None,
    keep_records: bool = False,
    table: DistributionTable | None = None,
) -> Claim3Sweep:
    """Claim 3 over every vertex and every realizable ``I_v``.

    Slices are built by grouping the full enumeration on ``I minus (N(v) + v)``;
    every independent subset of ``V - N[v]`` occurs as such a key, so the sweep
    is complete.
    """
    _require_locally_sparse(H)
    table = table or exact_distribution(H, params, cap)
    out = Claim3Sweep()
    for v in range(H.n):
        outside = ~_closed_neighborhood(H, v)
        groups: dict[int, tuple[list[float], list[float]]] = defaultdict(lambda: ([], []))
        for mask, lw in zip(table.masks, table.log_weights):
            groups[mask & outside][mask >> v & 1].append(lw)
        mass = []
        for key in sorted(groups):
            without_v, with_v = groups[key]
            mass.append(logsumexp(without_v + with_v) - table.log_partition)
            if not with_v:
                out.empty += 1
                continue
            q = _conditional(H, params.log_beta, v, key)
            lhs = math.exp(logsumexp(without_v) - logsumexp(with_v))
            rhs = math.exp(q.log_odds)
            gap = _gap(lhs, rhs)
            out.checked += 1
            for a, b in zip(q.log_w, q.log_w_plus):
                out.claim4_max_ratio = max(out.claim4_max_ratio, math.exp(a - b))
            if gap > out.max_gap or out.worst is None:
                out.max_gap = max(out.max_gap, gap)
                out.worst = (v, tuple(bits_of(key)))
            if keep_records:
                out.records.append((v, tuple(bits_of(key)), lhs, rhs, gap))
        out.slice_mass_error = max(out.slice_mass_error, abs(math.fsum(math.exp(m) for m in mass) - 1.0))
    return out


# -- uniform measure (no shadow weights) -------------------------------------


def uniform_conditional_x(r: int, d: float, y: int) -> float:
    """Closed-form ``E(X_v | I_v)`` under the uniform measure with ``y`` fully extendable edges at ``v``."""
    if y < 0 or d < 1 or r < 1:
        raise ValueError(f"need y >= 0, d >= 1, r >= 1 (got r={r}, d={d}, y={y})")
    # numerator and denominator divided by 2^{r y}
    q = ((2**r - 1) / 2**r) ** y
    return (y * 2.0 ** (-r) + d ** (1.0 / r) * q) / (1.0 + q)


def uniform_conditional_x_enumerated(
    H: Hypergraph, d: float, v: int, i_v: SubsetLike, cap: int | None = None
) -> float:
    """``E(X_v | I_v)`` for a uniform independent set, by enumeration.

    Here ``X_v = d^(1/r)`` when ``v`` is in ``I`` and ``|N_r(v) ∩ ∂_r I|`` otherwise.
    """
    _check_cap(H, cap)
    key = as_subset(H, i_v).bits
    _check_conditioning(H, v, key)
    outside = ~_closed_neighborhood(H, v)
    top = d ** (1.0 / H.r)
    links = set(H.link_masks[v])
    values = []
    for mask in _enumerate_masks(H):
        if mask & outside != key:
            continue
        if mask >> v & 1:
            values.append(top)
        else:
            values.append(float(sum(1 for link in links if link & mask == link)))
    return math.fsum(values) / len(values)


@dataclass(frozen=True)
class UniformShadowReport:
    mean_shadow_r: float
    conjecture_ratio: float | None
    alpha: int
    d: int
    n: int
    r: int

    def to_dict(self) -> dict:
        return {
            "mean_shadow_r": self.mean_shadow_r,
            "conjecture_ratio": self.conjecture_ratio,
            "alpha": self.alpha,
            "d": self.d,
            "n": self.n,
            "r": self.r,
            "note": "ratio E|∂_r I| / (d alpha^r n^(1-r)) under the uniform measure; report-only",
        }


def uniform_shadow_expectation(H: Hypergraph, cap: int | None = None) -> UniformShadowReport:
    """``E|∂_r I|`` for uniform ``I`` and its ratio to ``d alpha(H)^r n^(1-r)``."""
    if not H.sparsity.linear:
        raise NotLinear("the shadow conjecture concerns linear hypergraphs")
    _check_cap(H, cap)
    total, count = [], 0
    for mask in _enumerate_masks(H):
        total.append(shadow_counts(H, mask)[H.r - 1])
        count += 1
    mean = math.fsum(total) / count
    alpha, _ = independence_number(H)
    d = H.max_degree
    denom = d * alpha**H.r * H.n ** (1 - H.r) if H.n else 0.0
    ratio = mean / denom if denom > 0 else None
    return UniformShadowReport(mean, ratio, alpha, d, H.n, H.r)


__all__ = [
    "DEFAULT_CAP",
    "Claim1Sweep",
    "Claim3Result",
    "Claim3Sweep",
    "ClaimQuantities",
    "DistributionTable",
    "ExpectationReport",
    "SubsetTerm",
    "UniformShadowReport",
    "claim1_sweep",
    "claim3_sweep",
    "conditional_quantities",
    "count_independent_sets",
    "enumerate_independent_sets",
    "exact_distribution",
    "expectation_report",
    "independence_number",
    "logsumexp",
    "uniform_conditional_x",
    "uniform_conditional_x_enumerated",
    "uniform_shadow_expectation",
    "verify_claim3",
]
