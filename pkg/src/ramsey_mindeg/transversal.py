"""Independent transversals and triangles in multipartite graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, lcm
from typing import Iterable, Sequence

from .errors import BudgetExceeded, PreconditionError
from .graph import Graph, bits, to_mask

HAXELL_WORK_BUDGET = 5_000_000


@dataclass(frozen=True)
class MultipartiteView:
    """A graph with an ordered list of disjoint, nonempty vertex parts.

    ``origin`` is set by blow-ups: ``origin[x]`` is the vertex of the
    original view that copy ``x`` came from.
    """

    graph: Graph
    parts: tuple[tuple[int, ...], ...]
    origin: tuple[int, ...] | None = None

    def __post_init__(self):
        parts = tuple(tuple(sorted(p)) for p in self.parts)
        seen = 0
        for i, p in enumerate(parts):
            if not p:
                raise PreconditionError(f"part {i} is empty")
            for v in p:
                if not 0 <= v < self.graph.n:
                    raise PreconditionError(f"vertex {v} in part {i} is not in the graph")
                if seen >> v & 1:
                    raise PreconditionError(f"vertex {v} appears in more than one part")
                seen |= 1 << v
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, graph: Graph, parts: Iterable[Iterable[int]]) -> "MultipartiteView":
        return cls(graph, tuple(tuple(p) for p in parts))

    @property
    def m(self) -> int:
        return len(self.parts)

    def part_of(self) -> dict[int, int]:
        return {v: i for i, p in enumerate(self.parts) for v in p}

    def part_masks(self) -> list[int]:
        return [to_mask(p) for p in self.parts]

    def to_json(self) -> dict:
        return {"parts": [list(p) for p in self.parts]}


@dataclass(frozen=True)
class TransversalCert:
    vertices: tuple[int, ...]

    def validate(self, mv: MultipartiteView) -> bool:
        where = mv.part_of()
        if any(v not in where for v in self.vertices):
            return False
        if len({where[v] for v in self.vertices}) != len(self.vertices):
            return False
        return not any(mv.graph.has_edge(a, b) for a, b in combinations(self.vertices, 2))


def dominates(mv: MultipartiteView, B: Iterable[int] | int, A: Iterable[int] | int) -> bool:
    """True iff every vertex of ``A`` has a neighbour in ``B``."""
    b_mask = B if isinstance(B, int) else to_mask(B)
    a_vertices = bits(A) if isinstance(A, int) else A
    adj = mv.graph.adj
    return all(adj[a] & b_mask for a in a_vertices)


def haxell_condition_holds(
    mv: MultipartiteView, r: int, budget: int = HAXELL_WORK_BUDGET
) -> bool | tuple[tuple[int, ...], tuple[int, ...]]:
    """Check, for every set of parts S, that no ``2(|S|-m+r-1)`` vertices of
    V_S dominate V_S.

    Returns True, or the lexicographically first failing ``(S, X)`` with
    parts S as 0-based indices.
    """
    m = mv.m
    if not 1 <= r <= m:
        raise PreconditionError(f"need m >= r >= 1 (m={m}, r={r})")
    jobs = []
    work = 0
    for size in range(1, m + 1):
        bound = 2 * (size - m + r - 1)
        if bound <= 0:
            continue
        for S in combinations(range(m), size):
            vs = [v for i in S for v in mv.parts[i]]
            x_size = min(bound, len(vs))
            work += comb(len(vs), x_size)
            jobs.append((S, vs, x_size))
    if work > budget:
        raise BudgetExceeded(f"condition check too large ({work} candidate sets > {budget})")
    adj = mv.graph.adj
    for S, vs, x_size in jobs:
        for X in combinations(vs, x_size):
            x_mask = to_mask(X)
            if all(adj[a] & x_mask for a in vs):
                return S, X
    return True


def haxell_degree_bound_holds(mv: MultipartiteView, r: int) -> bool:
    """Sufficient test for the Haxell condition via maximum degree.

    A set X dominates at most ``max_degree * |X|`` vertices; if that is below
    ``|V_S|`` for the smallest parts of every size, the condition holds.
    """
    m = mv.m
    sizes = sorted(len(p) for p in mv.parts)
    in_parts = to_mask(v for p in mv.parts for v in p)
    delta = max(((mv.graph.adj[v] & in_parts).bit_count() for v in bits(in_parts)), default=0)
    smallest = 0
    for s in range(1, m + 1):
        smallest += sizes[s - 1]
        bound = 2 * (s - m + r - 1)
        if bound > 0 and delta * bound >= smallest:
            return False
    return True


def find_independent_transversal(mv: MultipartiteView, r: int) -> TransversalCert | None:
    """Exact search for ``r`` pairwise non-adjacent vertices in distinct parts.

    Returns None when no such set exists.
    """
    m = mv.m
    if r > m:
        return None
    if r <= 0:
        return TransversalCert(())
    adj = mv.graph.adj
    parts = mv.parts
    chosen: list[int] = []

    def search(i: int, blocked: int) -> bool:
        need = r - len(chosen)
        if need == 0:
            return True
        if m - i < need:
            return False
        for v in parts[i]:
            if not blocked >> v & 1:
                chosen.append(v)
                if search(i + 1, blocked | adj[v]):
                    return True
                chosen.pop()
        return search(i + 1, blocked)

    if search(0, 0):
        return TransversalCert(tuple(chosen))
    return None


def augment_with_clique_gadget(mv: MultipartiteView, r: int) -> MultipartiteView:
    """Add ``m - r`` disjoint copies of K_m, one vertex of each copy per part."""
    m = mv.m
    if r > m:
        raise PreconditionError(f"need m >= r (m={m}, r={r})")
    k = m - r
    n = mv.graph.n
    edges = mv.graph.edges()
    parts = [list(p) for p in mv.parts]
    for i in range(k):
        block = [n + i * m + j for j in range(m)]
        edges.extend(combinations(block, 2))
        for j, u in enumerate(block):
            parts[j].append(u)
    return MultipartiteView.of(Graph.from_edges(n + k * m, edges), parts)


def bes_condition_holds(mv: MultipartiteView, k: int) -> bool | tuple[int, int, int]:
    """Check that every u in part i misses fewer than ``k * |A_j|`` vertices
    outside its own part, for all j.

    Returns True or the first failing ``(u, i, j)``.
    """
    if mv.m != 2 * k + 1:
        raise PreconditionError(f"expected {2 * k + 1} parts, got {mv.m}")
    masks = mv.part_masks()
    union = 0
    for mk in masks:
        union |= mk
    sizes = [len(p) for p in mv.parts]
    adj = mv.graph.adj
    for i, part in enumerate(mv.parts):
        outside = union & ~masks[i]
        for u in part:
            missing = (outside & ~adj[u]).bit_count()
            for j, size in enumerate(sizes):
                if missing >= k * size:
                    return u, i, j
    return True


def blow_up_balanced(mv: MultipartiteView) -> MultipartiteView:
    """Replace each vertex of part i by ``L/|A_i|`` independent copies, where L
    is the lcm of the part sizes, so that every part has L vertices."""
    if not mv.parts:
        return mv
    size = lcm(*(len(p) for p in mv.parts))
    copies: dict[int, list[int]] = {}
    origin: list[int] = []
    new_parts = []
    for part in mv.parts:
        mult = size // len(part)
        block = []
        for u in part:
            ids = list(range(len(origin), len(origin) + mult))
            copies[u] = ids
            origin.extend([u] * mult)
            block.extend(ids)
        new_parts.append(block)
    edges = []
    for u, v in mv.graph.edges():
        if u in copies and v in copies:
            edges.extend((x, y) for x in copies[u] for y in copies[v])
    base = mv.origin
    lifted = tuple(base[u] for u in origin) if base is not None else tuple(origin)
    return MultipartiteView(Graph.from_edges(len(origin), edges), tuple(map(tuple, new_parts)), lifted)


def find_multipartite_triangle(mv: MultipartiteView) -> tuple[int, int, int] | None:
    """First triangle (lexicographic) with its three vertices in distinct parts."""
    where = mv.part_of()
    masks = mv.part_masks()
    adj = mv.graph.adj
    for u in sorted(where):
        for v in bits(adj[u] >> (u + 1) << (u + 1)):
            if v not in where or where[v] == where[u]:
                continue
            common = adj[u] & adj[v] & ~masks[where[u]] & ~masks[where[v]]
            common &= ~((1 << (v + 1)) - 1)
            for w in bits(common):
                if w in where:
                    return u, v, w
    return None


def project(mv: MultipartiteView, vertices: Sequence[int]) -> tuple[int, ...]:
    """Map blow-up vertices back to the vertices they were copied from."""
    if mv.origin is None:
        return tuple(vertices)
    return tuple(mv.origin[v] for v in vertices)
