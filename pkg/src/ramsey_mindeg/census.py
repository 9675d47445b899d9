"""Enumeration of small graphs up to isomorphism.

Canonical forms come from brute force over vertex orderings consistent with
a colour-refinement partition; graphs on n vertices are grown from those on
n-1 vertices by adding one vertex in every possible way.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .graph import Graph, bits, min_degree


def _refine(g: Graph) -> list[int]:
    """Stable vertex colours from iterated neighbour-colour multisets."""
    colour = [0] * g.n
    for _ in range(g.n):
        sig = [(colour[v], tuple(sorted(colour[w] for w in bits(g.adj[v])))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)) and new == colour:
            break
        colour = new
    return colour


def canonical_form(g: Graph) -> tuple[int, int]:
    """``(n, code)`` equal for two graphs iff they are isomorphic."""
    n = g.n
    if n <= 1:
        return n, 0
    colour = _refine(g)
    classes = [[v for v in range(n) if colour[v] == c] for c in sorted(set(colour))]
    best = -1
    adj = g.adj
    for choice in product(*(permutations(cls) for cls in classes)):
        order = [v for block in choice for v in block]
        code = 0
        for j in range(1, n):
            row = adj[order[j]]
            for i in range(j):
                code = code << 1 | (row >> order[i] & 1)
        if code > best:
            best = code
    return n, best


@lru_cache(maxsize=None)
def _graphs(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    seen: dict[tuple[int, int], Graph] = {}
    for base in _graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = list(base.adj) + [nbrs]
            for w in bits(nbrs):
                adj[w] |= 1 << (n - 1)
            g = Graph(n, tuple(adj))
            key = canonical_form(g)
            if key not in seen:
                seen[key] = g
    return tuple(seen[key] for key in sorted(seen))


def nonisomorphic_graphs(n: int, min_deg: int = 0) -> list[Graph]:
    """One representative per isomorphism class on ``n`` vertices."""
    graphs = _graphs(n)
    if min_deg <= 0 or n == 0:
        return list(graphs)
    return [g for g in graphs if min_degree(g) >= min_deg]


def labelled_graphs(n: int, min_deg: int = 0):
    """Every labelled graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [pairs[j] for j in bits(mask)])
        if n and min_degree(g) >= min_deg:
            yield g
