"""Uniform hypergraphs, vertex subsets as bitmasks, shadows and short-cycle detection.

Vertices are the dense integers ``0..n-1``. A vertex set is carried as a Python
``int`` bitmask (bit ``v`` set iff ``v`` is a member); :class:`VertexSubset` is the
public, hashable wrapper around that mask.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product

from .errors import DuplicateEdge, EdgeArity, VertexOutOfRange


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def k_submasks(mask: int, k: int) -> Iterator[int]:
    """All submasks of ``mask`` with exactly ``k`` set bits."""
    for combo in combinations(bits_of(mask), k):
        yield mask_of(combo)


@dataclass(frozen=True, slots=True)
class VertexSubset:
    """A set of vertices of an ``n``-vertex hypergraph, stored as a bit-vector."""

    bits: int
    n: int
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise VertexOutOfRange(f"subset mask {self.bits:#x} has bits outside 0..{self.n - 1}")
        object.__setattr__(self, "size", self.bits.bit_count())

    @classmethod
    def of(cls, n: int, vertices: Iterable[int] = ()) -> VertexSubset:
        vs = list(vertices)
        for v in vs:
            if not 0 <= v < n:
                raise VertexOutOfRange(f"vertex {v} not in 0..{n - 1}")
        return cls(mask_of(vs), n)

    @classmethod
    def empty(cls, n: int) -> VertexSubset:
        return cls(0, n)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(bits_of(self.bits))

    def __len__(self) -> int:
        return self.size

    def vertices(self) -> list[int]:
        return bits_of(self.bits)

    def with_vertex(self, v: int) -> VertexSubset:
        return VertexSubset(self.bits | (1 << v), self.n)

    def without_vertex(self, v: int) -> VertexSubset:
        return VertexSubset(self.bits & ~(1 << v), self.n)


SubsetLike = VertexSubset | int | Iterable[int]


@dataclass(frozen=True)
class Hypergraph:
    """Immutable ``(r+1)``-uniform hypergraph. Build instances with :func:`build`."""

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]
    incidence: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def uniformity(self) -> int:
        return self.r + 1

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(inc) for inc in self.incidence)

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """``N(v)`` as a mask, for every vertex."""
        out = []
        for v in range(self.n):
            m = 0
            for ei in self.incidence[v]:
                m |= self.edge_masks[ei]
            out.append(m & ~(1 << v))
        return tuple(out)

    @cached_property
    def link_masks(self) -> tuple[tuple[int, ...], ...]:
        """For every vertex ``v``, the masks of ``e \\ {v}`` over edges ``e`` containing ``v``."""
        return tuple(
            tuple(self.edge_masks[ei] & ~(1 << v) for ei in self.incidence[v]) for v in range(self.n)
        )

    @cached_property
    def sparsity(self) -> SparsityReport:
        return classify_sparsity(self)

    def subset(self, vertices: SubsetLike) -> VertexSubset:
        return as_subset(self, vertices)

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, m={self.m}, d={self.max_degree})"


def as_subset(H: Hypergraph, I: SubsetLike) -> VertexSubset:
    if isinstance(I, VertexSubset):
        if I.n != H.n:
            raise VertexOutOfRange(f"subset is over {I.n} vertices, hypergraph has {H.n}")
        return I
    if isinstance(I, int):
        return VertexSubset(I, H.n)
    return VertexSubset.of(H.n, I)


def build(n: int, r: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate an edge list and return the hypergraph with edges in lexicographic order."""
    if n < 0:
        raise VertexOutOfRange(f"vertex count must be nonnegative, got {n}")
    if r < 1:
        raise EdgeArity(f"shadow order r must be >= 1, got {r}")
    canon = []
    seen = set()
    for raw in edges:
        raw = list(raw)
        e = tuple(sorted(set(raw)))
        if len(raw) != r + 1 or len(e) != r + 1:
            raise EdgeArity(f"edge {raw} must have exactly {r + 1} distinct vertices")
        if e[0] < 0 or e[-1] >= n:
            raise VertexOutOfRange(f"edge {raw} has a vertex outside 0..{n - 1}")
        if e in seen:
            raise DuplicateEdge(f"edge {list(e)} listed more than once")
        seen.add(e)
        canon.append(e)
    canon.sort()
    incidence: list[list[int]] = [[] for _ in range(n)]
    for i, e in enumerate(canon):
        for v in e:
            incidence[v].append(i)
    return Hypergraph(n, r, tuple(canon), tuple(tuple(inc) for inc in incidence))


def induced(H: Hypergraph, keep: SubsetLike) -> tuple[Hypergraph, tuple[int, ...]]:
    """Sub-hypergraph induced on ``keep``, re-indexed densely.

    Returns the new hypergraph and the map from new vertex index to old index.
    """
    keep_mask = as_subset(H, keep).bits
    old = bits_of(keep_mask)
    new_index = {v: i for i, v in enumerate(old)}
    edges = [
        [new_index[v] for v in e]
        for e, em in zip(H.edges, H.edge_masks)
        if em & keep_mask == em
    ]
    return build(len(old), H.r, edges), tuple(old)


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not 0 <= v < H.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{H.n - 1}")


def neighborhood_masks(H: Hypergraph, v: int, k: int) -> set[int]:
    _check_vertex(H, v)
    if not 1 <= k <= H.r:
        raise ValueError(f"k must be in 1..{H.r}, got {k}")
    out: set[int] = set()
    for link in H.link_masks[v]:
        out.update(k_submasks(link, k))
    return out


def neighborhood_k(H: Hypergraph, v: int, k: int) -> set[frozenset[int]]:
    """``N_k(v)``: the ``k``-subsets ``f`` of ``V - {v}`` with ``f + {v}`` inside some edge."""
    return {frozenset(bits_of(m)) for m in neighborhood_masks(H, v, k)}


def shadow_masks(H: Hypergraph, I: int) -> list[set[int]]:
    """The shadows ``∂_1 I .. ∂_r I`` as sets of masks."""
    shadows: list[set[int]] = [set() for _ in range(H.r)]
    touched: set[int] = set()
    for v in bits_of(I):
        touched.update(H.incidence[v])
    for ei in touched:
        t = H.edge_masks[ei] & I
        c = t.bit_count()
        for k in range(1, min(c, H.r) + 1):
            shadows[k - 1].update(k_submasks(t, k))
    return shadows


def shadow_counts(H: Hypergraph, I: int) -> tuple[int, ...]:
    return tuple(len(s) for s in shadow_masks(H, I))


@dataclass(frozen=True)
class ShadowProfile:
    counts: tuple[int, ...]
    sets: tuple[frozenset[frozenset[int]], ...] | None = None

    @property
    def r(self) -> int:
        return len(self.counts)


def shadow_profile(H: Hypergraph, I: SubsetLike, keep_sets: bool = False) -> ShadowProfile:
    """Sizes of the ``k``-shadows of ``H`` on ``I`` for ``k = 1..r``. ``I`` need not be independent."""
    sub = as_subset(H, I)
    shadows = shadow_masks(H, sub.bits)
    sets = None
    if keep_sets:
        sets = tuple(frozenset(frozenset(bits_of(m)) for m in s) for s in shadows)
    return ShadowProfile(tuple(len(s) for s in shadows), sets)


def is_independent_mask(H: Hypergraph, I: int) -> bool:
    for em in H.edge_masks:
        if em & I == em:
            return False
    return True


def is_independent(H: Hypergraph, I: SubsetLike) -> bool:
    return is_independent_mask(H, as_subset(H, I).bits)


# -- short cycles ------------------------------------------------------------


@dataclass(frozen=True)
class CycleWitness:
    """Edges ``e_0..e_{k-1}`` (indices) and distinct vertices with ``v_i`` in ``e_i ∩ e_{i+1}``."""

    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    def replay(self, H: Hypergraph) -> bool:
        k = len(self.edges)
        if k < 2 or len(self.vertices) != k:
            return False
        if len(set(self.edges)) != k or len(set(self.vertices)) != k:
            return False
        for i in range(k):
            a = H.edges[self.edges[i]]
            b = H.edges[self.edges[(i + 1) % k]]
            if self.vertices[i] not in a or self.vertices[i] not in b:
                return False
        return True


@dataclass(frozen=True)
class SparsityReport:
    has_2cycle: bool
    has_3cycle: bool
    has_4cycle: bool
    witness: CycleWitness | None = None
    witnesses: dict[int, CycleWitness] = field(default_factory=dict, compare=False)

    @property
    def linear(self) -> bool:
        return not self.has_2cycle

    @property
    def locally_sparse(self) -> bool:
        return not (self.has_2cycle or self.has_3cycle)

    @property
    def uncrowded(self) -> bool:
        return self.locally_sparse and not self.has_4cycle

    def to_dict(self) -> dict:
        out = {
            "has_2cycle": self.has_2cycle,
            "has_3cycle": self.has_3cycle,
            "has_4cycle": self.has_4cycle,
            "linear": self.linear,
            "locally_sparse": self.locally_sparse,
            "uncrowded": self.uncrowded,
            "witness": None,
        }
        if self.witness is not None:
            out["witness"] = {"edges": list(self.witness.edges), "vertices": list(self.witness.vertices)}
        return out


def _distinct_representatives(sets: Sequence[tuple[int, ...]]) -> tuple[int, ...] | None:
    # k <= 4, so brute force over the product is cheap
    for choice in product(*sets):
        if len(set(choice)) == len(choice):
            return choice
    return None


def _find_cycle(H: Hypergraph, k: int, meets: list[dict[int, tuple[int, ...]]]) -> CycleWitness | None:
    """Search closed walks of ``k`` distinct edges in the intersection graph, smallest edge first."""
    if k == 2:
        for a in range(H.m):
            for b, common in meets[a].items():
                if b > a and len(common) >= 2:
                    return CycleWitness((a, b), common[:2])
        return None

    def extend(path: list[int]) -> CycleWitness | None:
        last = path[-1]
        if len(path) == k:
            first = path[0]
            if first not in meets[last]:
                return None
            links = [meets[path[i]][path[i + 1]] for i in range(k - 1)] + [meets[last][first]]
            reps = _distinct_representatives(links)
            if reps is None:
                return None
            return CycleWitness(tuple(path), reps)
        for nxt in meets[last]:
            # the smallest edge index opens the cycle
            if nxt > path[0] and nxt not in path:
                path.append(nxt)
                found = extend(path)
                path.pop()
                if found is not None:
                    return found
        return None

    for start in range(H.m):
        found = extend([start])
        if found is not None:
            return found
    return None


def classify_sparsity(H: Hypergraph) -> SparsityReport:
    """Exact detection of 2-, 3- and 4-cycles with a replayable witness for the shortest one found."""
    meets: list[dict[int, tuple[int, ...]]] = [dict() for _ in range(H.m)]
    for v in range(H.n):
        for a, b in combinations(H.incidence[v], 2):
            meets[a][b] = meets[a].get(b, ()) + (v,)
            meets[b][a] = meets[b].get(a, ()) + (v,)
    found = {k: _find_cycle(H, k, meets) for k in (2, 3, 4)}
    witness = next((found[k] for k in (2, 3, 4) if found[k] is not None), None)
    return SparsityReport(
        has_2cycle=found[2] is not None,
        has_3cycle=found[3] is not None,
        has_4cycle=found[4] is not None,
        witness=witness,
        witnesses={k: w for k, w in found.items() if w is not None},
    )
