"""Randomized greedy, random vertex subsampling, degree pruning and closed-form lower bounds."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .hypergraph import Hypergraph, VertexSubset, induced

LEADING_TERM_NOTE = "leading term, asymptotic in d"


@dataclass(frozen=True)
class GreedyTrace:
    order: tuple[int, ...]
    accepted: VertexSubset
    rejected_at: dict[int, int]  # vertex -> index of the edge it would have completed

    @property
    def size(self) -> int:
        return self.accepted.size


def greedy_in_order(H: Hypergraph, order) -> GreedyTrace:
    I = 0
    rejected = {}
    for v in order:
        J = I | (1 << v)
        for ei in H.incidence[v]:
            em = H.edge_masks[ei]
            if em & J == em:
                rejected[v] = ei
                break
        else:
            I = J
    return GreedyTrace(tuple(order), VertexSubset(I, H.n), rejected)


def randomized_greedy(H: Hypergraph, seed: int) -> GreedyTrace:
    """Scan a uniformly random vertex order, keeping each vertex unless it completes an edge."""
    rng = np.random.Generator(np.random.PCG64(seed))
    return greedy_in_order(H, rng.permutation(H.n).tolist())


def dlr_probability(r: int, d: float) -> float:
    """Keep probability ``(2 (r+1) d) ** (-2 / (3r - 1))``."""
    return (2 * (r + 1) * d) ** (-2.0 / (3 * r - 1))


@dataclass(frozen=True)
class Reduction:
    sub: Hypergraph
    kept: VertexSubset
    vertex_map: tuple[int, ...]  # new index -> old index
    p: float = 1.0
    degenerate_p: bool = False
    removed: int = 0


def dlr_reduce(H: Hypergraph, p: float | str = "auto", seed: int = 0) -> Reduction:
    """Keep each vertex independently with probability ``p`` and return the induced sub-hypergraph.

    ``p="auto"`` uses :func:`dlr_probability` with the maximum degree of ``H``;
    if that is not below 1 the reduction keeps everything and flags it.
    """
    degenerate = False
    if p == "auto":
        d = H.max_degree
        p = dlr_probability(H.r, d) if d > 0 else math.inf
        if p >= 1:
            p, degenerate = 1.0, True
    p = float(p)
    if not 0 < p <= 1:
        raise ValueError(f"keep probability must lie in (0, 1], got {p}")
    rng = np.random.Generator(np.random.PCG64(seed))
    keep = rng.random(H.n) < p
    kept = VertexSubset.of(H.n, np.flatnonzero(keep).tolist())
    sub, vmap = induced(H, kept)
    return Reduction(sub, kept, vmap, p, degenerate, H.n - kept.size)


def average_degree_reduce(H: Hypergraph, threshold_factor: float) -> Reduction:
    """Delete every vertex whose degree exceeds ``threshold_factor`` times the average degree."""
    if not threshold_factor > 1:
        raise ValueError("threshold_factor must exceed 1")
    avg = sum(H.degrees) / H.n if H.n else 0.0
    limit = threshold_factor * avg
    kept = VertexSubset.of(H.n, [v for v in range(H.n) if H.degrees[v] <= limit])
    removed = H.n - kept.size
    # Markov's inequality on the degree distribution
    assert removed <= H.n / threshold_factor, "more high-degree vertices than Markov allows"
    sub, vmap = induced(H, kept)
    return Reduction(sub, kept, vmap, removed=removed)


def kappa(r: int) -> float:
    """Constant of the main bound: ``(r-1)^(1-1/r) (2^r - 1) / (r^(2+2/r) 2^r)``."""
    return (r - 1) ** (1 - 1 / r) * (2**r - 1) / (r ** (2 + 2 / r) * 2**r)


AKPSS_BASE = 0.98 / math.e
C2_SHARP = 1 / 8


def akpss_constant(r: int) -> float:
    return AKPSS_BASE * 10 ** (-5 / r)


@dataclass(frozen=True)
class BoundsTable:
    n: int
    r: int
    d: float
    basic_sampling: float | None
    akpss: float | None
    main_theorem: float | None
    shearer_graph: float | None
    random_regular_ref: float | None
    nv_interval: tuple[float, float] | None
    exact_alpha: int | None
    kappa_r: float | None
    akpss_constant: float
    c2_sharp: float | None
    g: int | None = None

    def ratios(self) -> dict[str, float | None]:
        """``exact_alpha / bound`` for each bound present."""
        if self.exact_alpha is None:
            return {}
        out = {}
        for name in ("basic_sampling", "akpss", "main_theorem", "shearer_graph", "random_regular_ref"):
            b = getattr(self, name)
            out[name] = self.exact_alpha / b if b else None
        return out

    def to_dict(self) -> dict:
        out = asdict(self)
        out["nv_interval"] = list(self.nv_interval) if self.nv_interval else None
        out["ratios"] = self.ratios()
        out["note"] = (
            f"akpss, main_theorem, random_regular_ref, nv_interval: {LEADING_TERM_NOTE}; "
            "basic_sampling and shearer_graph hold for every d"
        )
        return out

    def to_text(self) -> str:
        rows = [
            ("basic_sampling", self.basic_sampling, "holds for all d >= 1"),
            ("akpss", self.akpss, LEADING_TERM_NOTE),
            ("main_theorem", self.main_theorem, LEADING_TERM_NOTE),
            ("shearer_graph", self.shearer_graph, "holds for all d >= 2 (r = 1)"),
            ("random_regular_ref", self.random_regular_ref, LEADING_TERM_NOTE),
        ]
        if self.nv_interval:
            rows.append(("nv_lower", self.nv_interval[0], LEADING_TERM_NOTE))
            rows.append(("nv_upper", self.nv_interval[1], LEADING_TERM_NOTE))
        ratios = self.ratios()
        lines = [f"n={self.n} r={self.r} d={self.d:g}" + (f" alpha={self.exact_alpha}" if self.exact_alpha is not None else "")]
        width = max(len(name) for name, _, _ in rows)
        for name, value, note in rows:
            cell = "-" if value is None else f"{value:.6g}"
            ratio = ratios.get(name)
            extra = f"  alpha/bound={ratio:.4g}" if ratio is not None else ""
            lines.append(f"{name:<{width}}  {cell:>12}  ({note}){extra}")
        lines.append(f"{'kappa_r':<{width}}  {('-' if self.kappa_r is None else f'{self.kappa_r:.6g}'):>12}")
        if self.c2_sharp is not None:
            lines.append(f"{'c_2 (sharp)':<{width}}  {self.c2_sharp:>12.6g}")
        return "\n".join(lines) + "\n"


def bounds_table(
    n: int, r: int, d: float, g: int | None = None, exact_alpha: int | None = None
) -> BoundsTable:
    """Every closed-form independence-number lower bound for ``n`` vertices, order ``r``, degree ``d``.

    Entries are ``None`` where a formula is undefined (``log d`` needs ``d >= 2``,
    Shearer only for graphs, the main bound only for ``r >= 2``).
    """
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    logs = d >= 2
    rate = (math.log(d) / d) ** (1 / r) if logs else None
    basic = (1 - 1 / r) * n / d ** (1 / r) if r >= 2 and d >= 1 else None
    akpss = akpss_constant(r) * rate * n if logs else None
    kap = kappa(r) if r >= 2 else None
    main = kap * rate * n if kap is not None and logs else None
    shearer = n * (d * math.log(d) - d + 1) / (d - 1) ** 2 if r == 1 and logs else None
    rr = (1 + 1 / r) ** (1 / r) * rate * n if logs else None
    nv = None
    if g is not None and logs:
        lead = (math.log(d) / (r * d)) ** (1 / r)
        slack = d**g / (r * math.factorial(g))
        nv = ((lead - slack) * n, (lead + slack) * n)
    return BoundsTable(
        n=n,
        r=r,
        d=d,
        basic_sampling=basic,
        akpss=akpss,
        main_theorem=main,
        shearer_graph=shearer,
        random_regular_ref=rr,
        nv_interval=nv,
        exact_alpha=exact_alpha,
        kappa_r=kap,
        akpss_constant=akpss_constant(r),
        c2_sharp=C2_SHARP if r == 2 else None,
        g=g,
    )
