"""Path machinery: inextensible paths, Pósa rotation, the Hamiltonian
decomposition of graphs with no long path, and exact longest paths."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import BudgetExceeded, InvariantViolation, PreconditionError
from .graph import Graph, bits, min_degree, to_mask

EXACT_PATH_BUDGET = 24


@dataclass(frozen=True)
class PathCert:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def validate(self, g: Graph) -> bool:
        return g.is_path(self.vertices)


@dataclass(frozen=True)
class Partition:
    parts: list[list[int]]
    ham_cycles: list[list[int]]
    d: int
    kind: str = field(default="Partition", init=False)

    def to_json(self) -> dict:
        return {"kind": self.kind, "d": self.d, "parts": self.parts, "ham_cycles": self.ham_cycles}


@dataclass(frozen=True)
class LongPath:
    path: PathCert
    d: int
    kind: str = field(default="LongPath", init=False)

    def to_json(self) -> dict:
        return {"kind": self.kind, "d": self.d, "path": list(self.path.vertices)}


DecompositionResult = Partition | LongPath


def is_hamiltonian_cycle(g: Graph, cycle: Sequence[int], vertices: Sequence[int] | None = None) -> bool:
    """Check ``cycle`` visits ``vertices`` (default: all of ``g``) once each.

    Cycles on one or two vertices are accepted degenerately (a vertex, an edge).
    """
    target = set(range(g.n)) if vertices is None else set(vertices)
    if len(cycle) != len(target) or set(cycle) != target:
        return False
    if len(cycle) <= 2:
        return g.is_path(cycle)
    return all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def _extend(g: Graph, path: list[int], on_path: int, alive: int, limit: int | None) -> int:
    """Greedily extend ``path`` at its tail, then at its head, in place.

    Always takes the lowest-index eligible neighbour. Stops early once the path
    has ``limit`` vertices. Returns the updated on-path mask.
    """
    for _ in range(2):
        while limit is None or len(path) < limit:
            free = g.adj[path[-1]] & alive & ~on_path
            if not free:
                break
            w = (free & -free).bit_length() - 1
            path.append(w)
            on_path |= 1 << w
        if limit is not None and len(path) >= limit:
            return on_path
        path.reverse()
    path.reverse()
    return on_path


def maximal_path(g: Graph, start: int) -> PathCert:
    """An inextensible path through ``start``."""
    if g.n == 0 or not 0 <= start < g.n:
        raise PreconditionError(f"start vertex {start} out of range")
    path = [start]
    _extend(g, path, 1 << start, g.vertex_mask, None)
    return PathCert(tuple(path))


def _rotate_closed(g: Graph, path: Sequence[int]) -> list[int]:
    """Close an inextensible path into a cycle on its vertex set (one rotation)."""
    ell = len(path)
    first, last = path[0], path[-1]
    if ell <= 2 or g.has_edge(first, last):
        return list(path)
    # 0-based i here is the 1-based i+1 of u_1 u_{i+1} ... u_l u_i ... u_1
    for i in range(1, ell - 2):
        if g.has_edge(first, path[i + 1]) and g.has_edge(last, path[i]):
            return [first] + list(path[i + 1:]) + list(reversed(path[1:i + 1]))
    raise PreconditionError("Pósa condition violated: no crossing chord pair")


def posa_close_cycle(g: Graph, p: PathCert | Sequence[int]) -> list[int]:
    path = list(p.vertices if isinstance(p, PathCert) else p)
    if not path or not g.is_path(path):
        raise PreconditionError("input is not a path of the graph")
    u_set = to_mask(path)
    u, v = path[0], path[-1]
    if (g.adj[u] | g.adj[v]) & ~u_set:
        raise PreconditionError("path not maximal: an endpoint has a neighbour off the path")
    if len(path) > 2 and g.degree(u) + g.degree(v) < len(path):
        raise PreconditionError("Pósa condition violated: d(u) + d(v) < |U|")
    cycle = _rotate_closed(g, path)
    for w in path:
        if g.adj[w] & ~u_set:
            raise PreconditionError("path not maximal: an edge leaves the path's vertex set")
    return cycle


def _open_cycle_at(cycle: list[int], end: int) -> list[int]:
    """Rotate ``cycle`` into a path that ends at ``end``."""
    i = cycle.index(end)
    return cycle[i + 1:] + cycle[:i + 1]


def decompose(g: Graph, d: int) -> DecompositionResult:
    """Split ``g`` into Hamiltonian components of size ``floor(d/2)+1 .. d-1``.

    Runs the greedy loop on inextensible paths; returns ``LongPath`` as soon as
    any path reaches ``d`` vertices.
    """
    if d < 1:
        raise PreconditionError("d must be at least 1")
    if g.n and min_degree(g) < d // 2:
        raise PreconditionError(f"minimum degree below floor(d/2) = {d // 2}")
    alive = g.vertex_mask
    parts: list[list[int]] = []
    cycles: list[list[int]] = []
    while alive:
        start = (alive & -alive).bit_length() - 1
        path = [start]
        on_path = _extend(g, path, 1 << start, alive, d)
        while True:
            if len(path) >= d:
                return LongPath(PathCert(tuple(path[:d])), d)
            cycle = _rotate_closed(g, path)
            # a vertex of the cycle with a neighbour outside gives a longer path
            exit_vertex = next((w for w in cycle if g.adj[w] & alive & ~on_path), None)
            if exit_vertex is None:
                break
            path = _open_cycle_at(cycle, exit_vertex)
            on_path = _extend(g, path, on_path, alive, d)
        if any(g.adj[w] & ~on_path for w in path):
            raise InvariantViolation("decomposition part is not a connected component")
        parts.append(sorted(path))
        cycles.append(cycle)
        alive &= ~on_path
    return Partition(parts, cycles, d)


def guaranteed_long_path(g: Graph, k: int) -> PathCert:
    """A path on at least ceil(n/k) vertices when min degree >= floor(n/(k+1))."""
    n = g.n
    if k < 1 or n == 0:
        raise PreconditionError("need k >= 1 and a nonempty graph")
    if min_degree(g) < n // (k + 1):
        raise PreconditionError(f"minimum degree below floor(n/(k+1)) = {n // (k + 1)}")
    target = -(-n // k)
    result = decompose(g, 2 * (n // (k + 1)) + 1)
    if isinstance(result, LongPath):
        path = result.path
    else:
        # some Hamiltonian part must already hold ceil(n/k) vertices
        best = max(result.ham_cycles, key=len)
        path = PathCert(tuple(best))
    if len(path) < target:
        raise InvariantViolation(f"path on {len(path)} vertices, expected at least {target}")
    return path


def longest_path_exact(g: Graph, budget: int = EXACT_PATH_BUDGET) -> PathCert:
    """Maximum-length path by exhaustive DFS; exits early on a Hamiltonian path
    of a component."""
    if g.n > budget:
        raise BudgetExceeded(f"instance too large for exact search (n={g.n} > {budget})")
    if g.n == 0:
        return PathCert(())
    adj = g.adj
    best: list[int] = []
    for comp in sorted(g.components(), key=len, reverse=True):
        if len(comp) <= len(best):
            break
        comp_mask = to_mask(comp)
        size = len(comp)
        stack_best = [comp[0]]
        path: list[int] = []

        def dfs(v: int, used: int) -> bool:
            nonlocal stack_best
            path.append(v)
            if len(path) > len(stack_best):
                stack_best = path.copy()
                if len(path) == size:
                    return True
            for w in bits(adj[v] & comp_mask & ~used):
                if dfs(w, used | 1 << w):
                    return True
            path.pop()
            return False

        # starting from low-degree vertices first finds Hamiltonian paths quickly
        for s in sorted(comp, key=g.degree):
            if dfs(s, 1 << s):
                break
            path.clear()
        if len(stack_best) > len(best):
            best = stack_best
    return PathCert(tuple(best))


def has_path_on(g: Graph, t: int, within: int | None = None) -> bool:
    """Whether ``g`` (restricted to ``within``) has a path on ``t`` vertices."""
    mask = g.vertex_mask if within is None else within
    if t <= 0:
        return True
    if t == 1:
        return bool(mask)
    adj = g.adj

    def dfs(v: int, used: int, depth: int) -> bool:
        if depth == t:
            return True
        for w in bits(adj[v] & mask & ~used):
            if dfs(w, used | 1 << w, depth + 1):
                return True
        return False

    return any(dfs(v, 1 << v, 1) for v in bits(mask))
