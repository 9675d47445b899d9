"""Random instance generators shared by the test modules."""

from __future__ import annotations

import random
from itertools import combinations

from ramsey_mindeg.graph import EdgeColouring, Graph, min_degree


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_colouring(g: Graph, rng: random.Random, p_red: float = 0.5) -> EdgeColouring:
    return EdgeColouring(g, frozenset(e for e in g.edges() if rng.random() < p_red))


def graph_with_min_degree(n: int, delta: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Random graph with minimum degree >= delta (adds edges until it holds)."""
    g = random_graph(n, p, rng)
    adj = list(g.adj)
    order = list(range(n))
    for v in order:
        while adj[v].bit_count() < min(delta, n - 1):
            choices = [w for w in range(n) if w != v and not adj[v] >> w & 1]
            w = rng.choice(choices)
            adj[v] |= 1 << w
            adj[w] |= 1 << v
    return Graph(n, tuple(adj))


def _block_sizes(n: int, lo: int, hi: int, rng: random.Random) -> list[int] | None:
    sizes = []
    left = n
    while left:
        if left < lo:
            return None
        s = rng.randint(lo, min(hi, left))
        if left - s and left - s < lo:
            s = left if left <= hi else left - lo
            if s < lo or s > hi:
                return None
        sizes.append(s)
        left -= s
    return sizes


def blocky_instance(n: int, sizes: list[int], max_missing: int, rng: random.Random, min_missing=0):
    """Blue cliques on consecutive blocks, red between blocks, then delete a random
    set of cross pairs; vertex v loses between ``min_missing(v)`` and
    ``max_missing`` of them (``min_missing`` may be an int or a per-part list).
    Returns None when the random deletion misses a lower bound."""
    parts, start = [], 0
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    where = {v: i for i, p in enumerate(parts) for v in p}
    lows = [min_missing[where[v]] if isinstance(min_missing, list) else min_missing for v in range(n)]
    cross = [(u, v) for u, v in combinations(range(n), 2) if where[u] != where[v]]
    rng.shuffle(cross)
    # pairs between needy vertices first, so lower bounds are met when possible
    cross.sort(key=lambda e: -(lows[e[0]] + lows[e[1]]))
    miss = [0] * n
    target = [rng.randint(lo, max(lo, max_missing)) for lo in lows]
    removed = set()
    for u, v in cross:
        if miss[u] < target[u] and miss[v] < target[v]:
            miss[u] += 1
            miss[v] += 1
            removed.add((u, v))
    if any(m < lo for m, lo in zip(miss, lows)):
        return None
    blue = [e for p in parts for e in combinations(p, 2)]
    red = [e for e in cross if e not in removed]
    g = Graph.from_edges(n, blue + red)
    return g, EdgeColouring(g, frozenset(red)), parts


def arrow_partition_instance(r: int, t: int, rng: random.Random, extra: int = 0):
    """Instance inside the K_r hypotheses whose red degrees stay <= n - t, so
    the extractor must go through the decomposition."""
    n = (r - 1) * (t - 1) + 1 + extra
    for _ in range(200):
        sizes = _block_sizes(n, t // 2 + 1, t - 1, rng)
        if sizes is None:
            continue
        made = blocky_instance(n, sizes, (t + 1) // 2 - 1, rng, min_missing=1)
        if made is None:
            continue
        g, c, parts = made
        if min_degree(g) >= n - (t + 1) // 2 and max(c.red_graph.degree(v) for v in range(n)) <= n - t:
            return g, c
    return None


def triangle_partition_instance(t: int, k: int, n: int, rng: random.Random, attempts: int = 400):
    """Instance inside the triangle hypotheses with all red degrees < ceil(n/2),
    so the extractor must reach the multipartite triangle step.

    Only some (t, k, n) admit one, e.g. (4, 1, 9), (6, 1, 13), (8, 1, 21), (4, 2, 15).
    """
    bound = n // 2 + ((n + 1) // 2) // (k + 1)
    m = 2 * k + 1
    sizes = [n // m + (1 if i < n % m else 0) for i in range(m)]
    if max(sizes) > t - 1:
        return None
    lows = [max(0, n - a - (n + 1) // 2 + 1) for a in sizes]
    for _ in range(attempts):
        made = blocky_instance(n, sizes, n - 1 - bound, rng, min_missing=lows)
        if made is None:
            continue
        g, c, _ = made
        if min_degree(g) >= bound and max(c.red_graph.degree(v) for v in range(n)) < (n + 1) // 2:
            return g, c
    return None


def balanced_dense_multipartite(m: int, size: int, rng: random.Random, keep_p: float = 0.4):
    """Balanced m-partite graph (parts of ``size``) with every degree above
    ``floor(m/2) * size``; cross pairs are dropped at random while that holds."""
    from ramsey_mindeg.transversal import MultipartiteView

    n = m * size
    need = (m // 2) * size + 1
    cross = [(u, v) for u, v in combinations(range(n), 2) if u // size != v // size]
    keep = set(cross)
    rng.shuffle(cross)
    deg = [(m - 1) * size] * n
    for u, v in cross:
        if deg[u] > need and deg[v] > need and rng.random() > keep_p:
            keep.discard((u, v))
            deg[u] -= 1
            deg[v] -= 1
    g = Graph.from_edges(n, keep)
    return MultipartiteView.of(g, [list(range(i * size, (i + 1) * size)) for i in range(m)])


def random_multipartite(rng: random.Random, m_max: int = 5, size_max: int = 3, p: float | None = None):
    from ramsey_mindeg.transversal import MultipartiteView

    sizes = [rng.randint(1, size_max) for _ in range(rng.randint(1, m_max))]
    parts, start = [], 0
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    where = {v: i for i, part in enumerate(parts) for v in part}
    p = rng.random() if p is None else p
    edges = [(u, v) for u, v in combinations(range(start), 2) if where[u] != where[v] and rng.random() < p]
    return MultipartiteView.of(Graph.from_edges(start, edges), parts)
