"""Slow, definition-level reference implementations used only as test oracles.

Nothing here touches the bitmask machinery of the package: hypergraphs are read
through ``H.n``, ``H.r`` and ``H.edges`` and everything else is plain sets.
"""

from itertools import combinations, permutations, product


def edge_sets(H):
    return [frozenset(e) for e in H.edges]


def all_subsets(n):
    for size in range(n + 1):
        for c in combinations(range(n), size):
            yield frozenset(c)


def independent_sets(H):
    edges = edge_sets(H)
    return [S for S in all_subsets(H.n) if not any(e <= S for e in edges)]


def shadow(H, I, k):
    edges = edge_sets(H)
    return {frozenset(c) for c in combinations(sorted(I), k) if any(set(c) <= e for e in edges)}


def neighborhood(H, v, k):
    out = set()
    for e in edge_sets(H):
        if v in e:
            for c in combinations(sorted(e - {v}), k):
                out.add(frozenset(c))
    return out


def has_cycle(H, k):
    edges = edge_sets(H)
    for es in permutations(range(len(edges)), k):
        choices = [edges[es[i]] & edges[es[(i + 1) % k]] for i in range(k)]
        for vs in product(*choices):
            if len(set(vs)) == k:
                return True
    return False


def weight(H, beta, I):
    """Unnormalized measure weight, exponentiated directly."""
    w = 1.0
    for k in range(2, H.r + 1):
        w *= beta[k] ** len(shadow(H, I, k))
    return w


def x_value(H, delta, d, I):
    r = H.r
    total = 0.0
    per = []
    for v in range(H.n):
        if v in I:
            per.append(d ** (1 / r))
        else:
            per.append(sum(delta ** (r - k) * len(neighborhood(H, v, k) & shadow(H, I, k)) for k in range(1, r + 1)))
        total += per[-1]
    return total, per


def independence_number(H):
    return max(len(S) for S in independent_sets(H))
