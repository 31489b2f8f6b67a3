"""Structured and random instances with certified sparsity classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import InfeasibleDegrees, InfeasibleOrder, RetryBudgetExceeded
from .hypergraph import Hypergraph, build

LOCAL_BUDGET = 10_000
GLOBAL_BUDGET = 100


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_empty(n: int, r: int = 2) -> Hypergraph:
    return build(n, r, [])


def gen_single_edge(r: int = 2) -> Hypergraph:
    return build(r + 1, r, [range(r + 1)])


def gen_loose_path(r: int, length: int) -> Hypergraph:
    """Edges ``{i r, ..., i r + r}``: consecutive edges share exactly one vertex."""
    if length < 1 or r < 1:
        raise ValueError("need length >= 1 and r >= 1")
    H = build(length * r + 1, r, [range(i * r, i * r + r + 1) for i in range(length)])
    assert H.sparsity.uncrowded
    return H


def gen_star(r: int, y: int) -> Hypergraph:
    """Center ``0`` lying in ``y`` otherwise disjoint edges."""
    if y < 0 or r < 1:
        raise ValueError("need y >= 0 and r >= 1")
    return build(1 + r * y, r, [[0, *range(1 + i * r, 1 + (i + 1) * r)] for i in range(y)])


def gen_random_regular(
    n: int,
    r: int,
    d: int,
    seed: int = 0,
    local_budget: int = LOCAL_BUDGET,
    global_budget: int = GLOBAL_BUDGET,
) -> Hypergraph:
    """Configuration model: ``d`` copies of every vertex cut into groups of ``r+1``.

    Groups with a repeated vertex or repeating an earlier edge are dissolved and
    their points re-dealt together with one random good group; after
    ``local_budget`` re-deals the whole pairing restarts.
    """
    k = r + 1
    if n < 1 or d < 0 or (n * d) % k:
        raise InfeasibleDegrees(f"(r+1)={k} must divide n*d={n * d}")
    rng = _rng(seed)
    for _ in range(global_budget):
        points = rng.permutation(np.repeat(np.arange(n), d))
        groups = [tuple(sorted(points[i : i + k].tolist())) for i in range(0, len(points), k)]
        for _ in range(local_budget):
            seen: set[tuple[int, ...]] = set()
            good, bad = [], []
            for g in groups:
                if len(set(g)) == k and g not in seen:
                    seen.add(g)
                    good.append(g)
                else:
                    bad.append(g)
            if not bad:
                return build(n, r, groups)
            if good:
                bad.append(good.pop(int(rng.integers(len(good)))))
            pool = rng.permutation([v for g in bad for v in g]).tolist()
            groups = good + [tuple(sorted(pool[i : i + k])) for i in range(0, len(pool), k)]
    raise RetryBudgetExceeded(f"no simple {d}-regular {k}-uniform hypergraph on {n} vertices found")


def gen_random_linear(
    n: int,
    r: int,
    m: int,
    seed: int = 0,
    local_budget: int = LOCAL_BUDGET,
    global_budget: int = GLOBAL_BUDGET,
) -> Hypergraph:
    """Add uniformly random ``(r+1)``-sets, rejecting any sharing two vertices with a chosen edge."""
    k = r + 1
    if k > n:
        raise RetryBudgetExceeded(f"no {k}-sets exist on {n} vertices")
    rng = _rng(seed)
    batch = 256
    for _ in range(global_budget):
        edges: list[tuple[int, ...]] = []
        covered: set[tuple[int, int]] = set()
        misses = 0
        while len(edges) < m and misses < local_budget:
            cands = np.argsort(rng.random((batch, n)), axis=1)[:, :k]
            for row in cands.tolist():
                e = tuple(sorted(row))
                pairs = list(combinations(e, 2))
                if any(p in covered for p in pairs):
                    misses += 1
                    if misses >= local_budget:
                        break
                    continue
                edges.append(e)
                covered.update(pairs)
                misses = 0
                if len(edges) == m:
                    break
        if len(edges) == m:
            H = build(n, r, edges)
            assert H.sparsity.linear
            return H
    raise RetryBudgetExceeded(f"could not place {m} pairwise-linear {k}-sets on {n} vertices")


def _bose(n: int) -> list[tuple[int, int, int]]:
    q = n // 3  # odd; idempotent commutative quasigroup x.y = (q+1)/2 (x+y) mod q
    half = (q + 1) // 2

    def pt(x, i):
        return x + (i % 3) * q

    triples = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(q)]
    for i in range(3):
        for x, y in combinations(range(q), 2):
            triples.append((pt(x, i), pt(y, i), pt(half * (x + y) % q, i + 1)))
    return triples


def _skolem(n: int) -> list[tuple[int, int, int]]:
    t = (n - 1) // 6
    q = 2 * t  # half-idempotent commutative quasigroup on Z_2t

    def op(x, y):
        s = (x + y) % q
        return s // 2 if s % 2 == 0 else t + s // 2

    def pt(x, i):
        return x + (i % 3) * q

    inf = n - 1
    triples = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(t)]
    for x in range(t):
        for i in range(3):
            triples.append((inf, pt(x + t, i), pt(x, i + 1)))
    for i in range(3):
        for x, y in combinations(range(q), 2):
            triples.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return triples


def steiner_audit(H: Hypergraph) -> bool:
    """Every pair of vertices lies in exactly one edge."""
    count: dict[tuple[int, int], int] = {}
    for e in H.edges:
        for p in combinations(e, 2):
            count[p] = count.get(p, 0) + 1
    return len(count) == H.n * (H.n - 1) // 2 and all(c == 1 for c in count.values())


def gen_steiner_triple(n: int) -> Hypergraph:
    """Bose construction for ``n ≡ 3 (mod 6)``, Skolem construction for ``n ≡ 1 (mod 6)``."""
    if n < 7 or n % 6 not in (1, 3):
        raise InfeasibleOrder(f"Steiner triple systems need n ≡ 1, 3 (mod 6) and n >= 7, got {n}")
    triples = _bose(n) if n % 6 == 3 else _skolem(n)
    H = build(n, 2, triples)
    assert steiner_audit(H) and H.max_degree == (n - 1) // 2
    return H


def gen_bipartite_regular_graph(
    n: int, d: int, seed: int = 0, local_budget: int = LOCAL_BUDGET, global_budget: int = GLOBAL_BUDGET
) -> Hypergraph:
    """Union of ``d`` random perfect matchings between the halves ``0..n/2-1`` and ``n/2..n-1``."""
    if n % 2 or d < 0 or d > n // 2:
        raise InfeasibleDegrees(f"need even n and d <= n/2, got n={n}, d={d}")
    h = n // 2
    rng = _rng(seed)
    for _ in range(global_budget):
        used: set[tuple[int, int]] = set()
        ok = True
        for _ in range(d):
            for _ in range(local_budget):
                perm = rng.permutation(h).tolist()
                match = {(i, h + perm[i]) for i in range(h)}
                if not match & used:
                    used |= match
                    break
            else:
                ok = False
                break
        if ok:
            H = build(n, 1, sorted(used))
            assert not H.sparsity.has_3cycle
            return H
    raise RetryBudgetExceeded(f"could not assemble a {d}-regular bipartite graph on {n} vertices")


KINDS = (
    "loose_path",
    "random_regular",
    "random_linear",
    "steiner_triple",
    "bipartite_graph",
    "single_edge",
    "empty",
    "star",
)


@dataclass(frozen=True)
class GenSpec:
    kind: str
    params: dict = field(default_factory=dict)

    _REQUIRED = {
        "loose_path": ("r", "length"),
        "random_regular": ("n", "r", "d"),
        "random_linear": ("n", "r", "m"),
        "steiner_triple": ("n",),
        "bipartite_graph": ("n", "d"),
        "single_edge": ("r",),
        "empty": ("n", "r"),
        "star": ("r", "length"),
    }

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}; choose from {', '.join(KINDS)}")
        missing = [p for p in self._REQUIRED[self.kind] if self.params.get(p) is None]
        if missing:
            raise ValueError(f"{self.kind} needs parameters: {', '.join(missing)}")


def generate(spec: GenSpec) -> Hypergraph:
    p = spec.params
    seed = p.get("seed") or 0
    match spec.kind:
        case "loose_path":
            return gen_loose_path(p["r"], p["length"])
        case "random_regular":
            return gen_random_regular(p["n"], p["r"], p["d"], seed)
        case "random_linear":
            return gen_random_linear(p["n"], p["r"], p["m"], seed)
        case "steiner_triple":
            return gen_steiner_triple(p["n"])
        case "bipartite_graph":
            return gen_bipartite_regular_graph(p["n"], p["d"], seed)
        case "single_edge":
            return gen_single_edge(p["r"])
        case "empty":
            return gen_empty(p["n"], p["r"])
        case "star":
            return gen_star(p["r"], p["length"])
    raise AssertionError(spec.kind)
