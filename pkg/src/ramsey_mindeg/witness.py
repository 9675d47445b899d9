"""Certificate extraction for G -> (K_r, P_t) inside the degree hypotheses.

Both extractors follow an induction: a vertex of high red degree either
recurses into its red neighbourhood, or the blue graph has enough minimum
degree to split into small Hamiltonian components whose cross edges are all
red.  Every returned witness is re-validated against the input colouring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import InvariantViolation, PreconditionError
from .graph import EdgeColouring, Graph, RamseyParams, Witness, WitnessKind, min_degree
from .paths import LongPath, decompose, guaranteed_long_path
from .transversal import (
    MultipartiteView,
    bes_condition_holds,
    blow_up_balanced,
    find_independent_transversal,
    find_multipartite_triangle,
    haxell_condition_holds,
    haxell_degree_bound_holds,
    project,
)


@dataclass
class WitnessTrace:
    witness: Witness
    steps: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {**self.witness.to_json(), "steps": self.steps}


def validate_witness(g: Graph, c: EdgeColouring, w: Witness, params: RamseyParams) -> bool:
    vs = w.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        return False
    if w.kind is WitnessKind.RED_CLIQUE:
        return len(vs) == params.r and all(
            g.has_edge(a, b) and c.is_red(a, b) for a, b in combinations(vs, 2)
        )
    return len(vs) == params.t and all(c.is_blue(a, b) for a, b in zip(vs, vs[1:]))


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def _red_vertex(c: EdgeColouring, threshold: int) -> int | None:
    red = c.red_graph
    return next((v for v in range(red.n) if red.degree(v) >= threshold), None)


def _cross_graph(g: Graph, parts: Sequence[Sequence[int]], keep_edges: bool) -> Graph:
    """Pairs of ``g`` in distinct parts: its edges (``keep_edges``) or its non-edges."""
    where = {v: i for i, p in enumerate(parts) for v in p}
    full = g.vertex_mask
    adj = []
    for v in range(g.n):
        same = 0
        for w in parts[where[v]]:
            same |= 1 << w
        row = g.adj[v] if keep_edges else full & ~g.adj[v]
        adj.append(row & ~same)
    return Graph(g.n, tuple(adj))


def _path_from_cycle(cycle: Sequence[int], t: int) -> list[int]:
    return list(cycle[:t])


def _arrow(
    g: Graph,
    c: EdgeColouring,
    r: int,
    t: int,
    labels: list[int],
    steps: list[dict],
    diagnostic: bool,
    record: list | None,
) -> Witness:
    n = g.n
    if n < (r - 1) * (t - 1) + 1 or (n and min_degree(g) < n - _ceil_half(t)):
        raise InvariantViolation(f"recursion reached r={r} on n={n} outside the hypotheses", steps)
    if r == 2:
        if c.red:
            e = min(c.red)
            steps.append({"step": "base-red-edge", "vertices": [labels[e[0]], labels[e[1]]]})
            return Witness.red_clique(e)
        steps.append({"step": "base-blue-path", "r": 2})
        return _blue_path_or_fail(c.blue_graph, t, t, labels, steps)

    u = _red_vertex(c, n - t + 1)
    if u is not None:
        nbhd = c.red_graph.adj[u]
        sub, index_map = g.induced_subgraph(nbhd)
        steps.append(
            {"step": "high-red-degree", "r": r, "vertex": labels[u], "red_degree": nbhd.bit_count()}
        )
        inner = _arrow(
            sub, c.restrict(index_map), r - 1, t, [labels[i] for i in index_map], steps, diagnostic, record
        ).lift(index_map)
        if inner.kind is WitnessKind.RED_CLIQUE:
            return Witness.red_clique(inner.vertices + (u,))
        return inner

    blue = c.blue_graph
    if min_degree(blue) < t // 2:
        raise InvariantViolation("blue minimum degree below floor(t/2)", steps)
    result = decompose(blue, t)
    if isinstance(result, LongPath):
        steps.append({"step": "decomposition", "d": t, "result": "LongPath",
                      "vertices": [labels[v] for v in result.path.vertices]})
        return Witness.blue_path(result.path.vertices[:t])
    steps.append({"step": "decomposition", "d": t, "result": "Partition",
                  "parts": [[labels[v] for v in p] for p in result.parts]})
    mv = MultipartiteView.of(_cross_graph(g, result.parts, keep_edges=False), result.parts)
    if record is not None:
        record.append((mv, r))
    if mv.m < r:
        raise InvariantViolation(f"only {mv.m} parts for r={r}", steps)
    if not haxell_degree_bound_holds(mv, r):
        raise InvariantViolation("degree chain for the transversal condition failed", steps)
    if diagnostic and haxell_condition_holds(mv, r) is not True:
        raise InvariantViolation("exhaustive transversal condition failed", steps)
    cert = find_independent_transversal(mv, r)
    if cert is None:
        raise InvariantViolation("no independent transversal despite the condition", steps)
    steps.append({"step": "transversal", "vertices": [labels[v] for v in cert.vertices]})
    return Witness.red_clique(cert.vertices)


def _blue_path_or_fail(blue: Graph, d: int, t: int, labels: list[int], steps: list[dict]) -> Witness:
    result = decompose(blue, d)
    if isinstance(result, LongPath):
        steps.append({"step": "decomposition", "d": d, "result": "LongPath",
                      "vertices": [labels[v] for v in result.path.vertices]})
        return Witness.blue_path(result.path.vertices[:t])
    steps.append({"step": "decomposition", "d": d, "result": "Partition",
                  "parts": [[labels[v] for v in p] for p in result.parts]})
    for cycle in result.ham_cycles:
        if len(cycle) >= t:
            return Witness.blue_path(_path_from_cycle(cycle, t))
    raise InvariantViolation("blue graph has no long path despite its minimum degree", steps)


def _finish(g: Graph, c: EdgeColouring, w: Witness, params: RamseyParams, steps: list[dict]) -> WitnessTrace:
    if not validate_witness(g, c, w, params):
        raise InvariantViolation(f"extracted witness {w} does not validate", steps)
    return WitnessTrace(w, steps)


def _check_colouring(g: Graph, c: EdgeColouring) -> None:
    if c.graph != g:
        raise PreconditionError("colouring does not belong to the given graph")


def arrow_witness(
    g: Graph,
    c: EdgeColouring,
    r: int,
    t: int,
    *,
    diagnostic: bool = False,
    record: list | None = None,
) -> WitnessTrace:
    """Red K_r or blue P_t in any colouring of a graph with
    n >= (r-1)(t-1)+1 and min degree >= n - ceil(t/2)."""
    params = RamseyParams(r, t)
    _check_colouring(g, c)
    n = g.n
    if n < (r - 1) * (t - 1) + 1 or min_degree(g) < n - _ceil_half(t):
        raise PreconditionError(
            f"degree/size hypothesis not met: need n >= {(r - 1) * (t - 1) + 1} "
            f"and min degree >= {n - _ceil_half(t)}"
        )
    steps: list[dict] = []
    w = _arrow(g, c, r, t, list(range(n)), steps, diagnostic, record)
    return _finish(g, c, w, params, steps)


def triangle_bound(n: int, k: int) -> int:
    return n // 2 + _ceil_half(n) // (k + 1)


def triangle_arrow_witness(
    g: Graph,
    c: EdgeColouring,
    t: int,
    k: int,
    *,
    diagnostic: bool = False,
    record: list | None = None,
) -> WitnessTrace:
    """Red triangle or blue P_t when 2(t-1)k < n <= 2(t-1)(k+1) and
    min degree >= floor(n/2) + floor(ceil(n/2)/(k+1))."""
    params = RamseyParams(3, t, k)
    _check_colouring(g, c)
    n = g.n
    if not 2 * (t - 1) * k < n <= 2 * (t - 1) * (k + 1) or min_degree(g) < triangle_bound(n, k):
        raise PreconditionError(
            f"degree/size hypothesis not met: need {2 * (t - 1) * k} < n <= {2 * (t - 1) * (k + 1)} "
            f"and min degree >= {triangle_bound(n, k)}"
        )
    steps: list[dict] = []
    labels = list(range(n))
    half = _ceil_half(n)
    u = _red_vertex(c, half)
    if u is not None:
        nbhd = c.red_graph.adj[u]
        sub, index_map = g.induced_subgraph(nbhd)
        steps.append({"step": "high-red-degree", "r": 3, "vertex": u, "red_degree": nbhd.bit_count()})
        try:
            path = guaranteed_long_path(sub, k).vertices
        except PreconditionError as exc:
            raise InvariantViolation(f"red neighbourhood lost the degree bound: {exc}", steps) from None
        if len(path) < t:
            raise InvariantViolation(f"neighbourhood path has {len(path)} < {t} vertices", steps)
        lifted = [index_map[v] for v in path[:t]]
        steps.append({"step": "neighbourhood-path", "vertices": lifted})
        for a, b in zip(lifted, lifted[1:]):
            if c.is_red(a, b):
                return _finish(g, c, Witness.red_clique((u, a, b)), params, steps)
        return _finish(g, c, Witness.blue_path(lifted), params, steps)

    blue = c.blue_graph
    d = 2 * (half // (k + 1)) + 1
    if d < t or min_degree(blue) < d // 2:
        raise InvariantViolation(f"decomposition parameter d={d} invalid for t={t}", steps)
    result = decompose(blue, d)
    if isinstance(result, LongPath):
        steps.append({"step": "decomposition", "d": d, "result": "LongPath", "vertices": list(result.path.vertices)})
        return _finish(g, c, Witness.blue_path(result.path.vertices[:t]), params, steps)
    steps.append({"step": "decomposition", "d": d, "result": "Partition", "parts": result.parts})
    for cycle in result.ham_cycles:
        if len(cycle) >= t:
            return _finish(g, c, Witness.blue_path(_path_from_cycle(cycle, t)), params, steps)
    mv = MultipartiteView.of(_cross_graph(c.red_graph, result.parts, keep_edges=True), result.parts)
    if record is not None:
        record.append((mv, k))
    if mv.m != 2 * k + 1:
        raise InvariantViolation(f"decomposition has {mv.m} parts, expected {2 * k + 1}", steps)
    failing = bes_condition_holds(mv, k)
    if failing is not True:
        raise InvariantViolation(f"multipartite degree condition fails at {failing}", steps)
    tri = find_multipartite_triangle(mv)
    if diagnostic:
        blown = blow_up_balanced(mv)
        hit = find_multipartite_triangle(blown)
        if (tri is None) != (hit is None):
            raise InvariantViolation("blow-up and original disagree on triangles", steps)
        if hit is not None:
            a, b, x = project(blown, hit)
            if not (mv.graph.has_edge(a, b) and mv.graph.has_edge(b, x) and mv.graph.has_edge(a, x)):
                raise InvariantViolation("blow-up triangle does not project to a triangle", steps)
    if tri is None:
        raise InvariantViolation("no triangle despite the multipartite degree condition", steps)
    steps.append({"step": "multipartite-triangle", "vertices": list(tri)})
    return _finish(g, c, Witness.red_clique(tri), params, steps)
