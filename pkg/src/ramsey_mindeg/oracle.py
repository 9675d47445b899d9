"""Exhaustive ground truth for G -> (K_r, P_t).

Colouring ``i`` of a graph paints edge ``j`` (edges in lexicographic order)
red iff bit ``j`` of ``i`` is set.  The search assigns edges from the highest
bit down, blue before red, and abandons a branch as soon as the assigned
edges already contain a red K_r or a blue P_t.  Both properties are monotone,
so every abandoned subtree is a block of colourings that all contain a
witness.  The first complete assignment reached is therefore the
lowest-index counterexample.
"""

from __future__ import annotations

import logging
import multiprocessing as mp
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Sequence

from .errors import BudgetExceeded, InvariantViolation, PreconditionError
from .graph import EdgeColouring, Graph, bits, min_degree, to_graph6
from .paths import longest_path_exact

log = logging.getLogger(__name__)

COLOURING_BUDGET = 24
_CHECK_EVERY = 4096

_cancel = None


def _init_worker(event) -> None:
    global _cancel
    _cancel = event


# ---------------------------------------------------------------------------
# independent checks


def find_clique(g: Graph, r: int, within: int | None = None) -> list[int] | None:
    """A clique on ``r`` vertices (bitset-intersection recursion), or None."""
    adj = g.adj
    cand0 = g.vertex_mask if within is None else within
    chosen: list[int] = []

    def grow(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        for v in bits(cand):
            chosen.append(v)
            if grow(cand & adj[v] & ~((1 << (v + 1)) - 1), need - 1):
                return True
            chosen.pop()
        return False

    return chosen if grow(cand0, r) else None


def has_red_clique(c: EdgeColouring, r: int) -> bool:
    return find_clique(c.red_graph, r) is not None


def has_blue_path(c: EdgeColouring, t: int) -> bool:
    return len(longest_path_exact(c.blue_graph, budget=max(c.graph.n, 1))) >= t


def is_counterexample(c: EdgeColouring, r: int, t: int) -> bool:
    """No red K_r and no blue P_t."""
    return not has_red_clique(c, r) and not has_blue_path(c, t)


# ---------------------------------------------------------------------------
# incremental search


def _clique_in(adj: list[int], cand: int, need: int) -> bool:
    if need <= 0:
        return True
    if cand.bit_count() < need:
        return False
    if need == 1:
        return True
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if _clique_in(adj, cand & adj[v], need - 1):
            return True
    return False


def _path_from(adj: list[int], v: int, avoid: int, need: int) -> bool:
    """A path starting at ``v`` with ``need`` vertices, avoiding ``avoid``."""
    if need <= 1:
        return True
    used = avoid | 1 << v
    free = adj[v] & ~used
    while free:
        low = free & -free
        free ^= low
        if _path_from(adj, low.bit_length() - 1, used, need - 1):
            return True
    return False


def _path_through(adj: list[int], u: int, v: int, t: int) -> bool:
    """A path on ``t`` vertices using the edge ``uv``."""
    vbit = 1 << v

    def left(x: int, used: int, a: int) -> bool:
        if _path_from(adj, v, used, t - a):
            return True
        if a >= t - 1:
            return False
        free = adj[x] & ~used & ~vbit
        while free:
            low = free & -free
            free ^= low
            if left(low.bit_length() - 1, used | low, a + 1):
                return True
        return False

    return left(u, 1 << u, 1)


class _Search:
    def __init__(self, n: int, edges: Sequence[tuple[int, int]], r: int, t: int):
        self.n = n
        self.edges = list(edges)
        self.r = r
        self.t = t

    def _red_closes(self, red: list[int], u: int, v: int) -> bool:
        if self.r <= 2:
            return True
        return _clique_in(red, red[u] & red[v], self.r - 2)

    def _blue_closes(self, blue: list[int], u: int, v: int) -> bool:
        if self.t <= 2:
            return True
        return _path_through(blue, u, v, self.t)

    def run(self, prefix: int, fixed: int) -> tuple[int | None, int]:
        """Search colourings whose top ``fixed`` bits equal ``prefix``.

        Returns ``(lowest counterexample index or None, colourings covered)``.
        """
        E = len(self.edges)
        red = [0] * self.n
        blue = [0] * self.n
        free_bits = E - fixed
        # apply the prefix, checking each edge as it lands
        for j in range(E - 1, free_bits - 1, -1):
            u, v = self.edges[j]
            if prefix >> (j - free_bits) & 1:
                red[u] |= 1 << v
                red[v] |= 1 << u
                if self._red_closes(red, u, v):
                    return None, 1 << free_bits
            else:
                blue[u] |= 1 << v
                blue[v] |= 1 << u
                if self._blue_closes(blue, u, v):
                    return None, 1 << free_bits
        covered = 0
        nodes = 0
        assignment = prefix << free_bits
        edges = self.edges
        cancelled = False

        def rec(j: int) -> bool:
            nonlocal covered, nodes, assignment, cancelled
            if j < 0:
                return True
            nodes += 1
            if nodes % _CHECK_EVERY == 0 and _cancel is not None and _cancel.is_set():
                cancelled = True
                return False
            u, v = edges[j]
            bu, bv = 1 << u, 1 << v
            blue[u] |= bv
            blue[v] |= bu
            ok = not self._blue_closes(blue, u, v)
            if ok and rec(j - 1):
                return True
            blue[u] &= ~bv
            blue[v] &= ~bu
            if cancelled:
                return False
            if not ok:
                covered += 1 << j
            red[u] |= bv
            red[v] |= bu
            assignment |= 1 << j
            ok = not self._red_closes(red, u, v)
            if ok and rec(j - 1):
                return True
            red[u] &= ~bv
            red[v] &= ~bu
            assignment &= ~(1 << j)
            if not ok:
                covered += 1 << j
            return False

        if rec(free_bits - 1):
            return assignment, covered + 1
        return None, covered


def _run_chunk(n: int, edges, r: int, t: int, prefix: int, fixed: int):
    return prefix, _Search(n, edges, r, t).run(prefix, fixed)


# ---------------------------------------------------------------------------
# public API


@dataclass(frozen=True)
class ArrowVerdict:
    arrows: bool
    counterexample: EdgeColouring | None
    colourings_examined: int
    r: int = 0
    t: int = 0
    counterexample_index: int | None = field(default=None)

    def to_json(self) -> dict:
        out = {
            "arrows": self.arrows,
            "r": self.r,
            "t": self.t,
            "colourings_examined": self.colourings_examined,
            "counterexample": None,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json()
            out["counterexample_index"] = self.counterexample_index
        return out


def _split_bits(num_edges: int, threads: int) -> int:
    want = max(1, threads * 8)
    return min(num_edges, max(0, (want - 1).bit_length()))


def arrows(
    g: Graph,
    r: int,
    t: int,
    *,
    threads: int = 1,
    deterministic: bool = True,
    budget: int = COLOURING_BUDGET,
) -> ArrowVerdict:
    """Decide G -> (K_r, P_t) by exhausting all 2^|E| colourings."""
    if r < 1 or t < 1:
        raise PreconditionError("need r >= 1 and t >= 1")
    edges = g.edges()
    E = len(edges)
    if E > budget:
        raise BudgetExceeded(
            f"{E} edges exceed the enumeration budget of {budget}; use witness mode for graphs inside the degree hypotheses"
        )
    total = 1 << E
    if r == 1 and g.n >= 1:
        return ArrowVerdict(True, None, total, r, t)
    fixed = _split_bits(E, threads) if threads > 1 else 0
    chunks = list(range(1 << fixed))
    found: int | None = None
    covered = 0
    if threads <= 1:
        search = _Search(g.n, edges, r, t)
        for prefix in chunks:
            idx, cov = search.run(prefix, fixed)
            covered += cov
            if idx is not None:
                found = idx
                break
    else:
        found, covered = _parallel(g.n, edges, r, t, fixed, chunks, threads, deterministic)
    if found is None:
        if covered != total:
            raise InvariantViolation(f"search covered {covered} of {total} colourings")
        return ArrowVerdict(True, None, covered, r, t)
    colouring = EdgeColouring.from_index(g, found, edges)
    if not is_counterexample(colouring, r, t):
        raise InvariantViolation(f"colouring {found} failed independent re-validation")
    return ArrowVerdict(False, colouring, covered, r, t, found)


def _parallel(n, edges, r, t, fixed, chunks, threads, deterministic):
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    event = ctx.Event()
    results: dict[int, tuple[int | None, int]] = {}
    with ProcessPoolExecutor(threads, mp_context=ctx, initializer=_init_worker, initargs=(event,)) as pool:
        pending = {pool.submit(_run_chunk, n, edges, r, t, p, fixed) for p in chunks}
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                prefix, res = fut.result()
                results[prefix] = res
            if deterministic:
                # the lowest chunk with a counterexample wins once every lower chunk is in
                for p in chunks:
                    if p not in results:
                        break
                    if results[p][0] is not None:
                        event.set()
                        for f in pending:
                            f.cancel()
                        pending = set()
                        break
            elif any(res[0] is not None for res in results.values()):
                event.set()
                for f in pending:
                    f.cancel()
                pending = set()
    hits = [res[0] for p, res in sorted(results.items()) if res[0] is not None]
    covered = sum(res[1] for res in results.values())
    return (min(hits) if hits else None), covered


def ramsey_number(r: int, t: int, n_max: int, *, threads: int = 1, budget: int = COLOURING_BUDGET) -> int:
    """Least n <= n_max with K_n -> (K_r, P_t)."""
    for n in range(1, n_max + 1):
        if arrows(Graph.complete(n), r, t, threads=threads, budget=budget).arrows:
            return n
    raise BudgetExceeded(f"no n <= {n_max} with K_n -> (K_{r}, P_{t})")


# ---------------------------------------------------------------------------
# tightness sweep


@dataclass
class SweepReport:
    r: int
    t: int
    n: int
    threshold: int
    mode: str
    graphs_checked: int = 0
    graphs_arrowing: int = 0
    failures: list[str] = field(default_factory=list)
    per_graph: list[dict] = field(default_factory=list)
    construction_graph6: str = ""
    construction_min_degree: int = -1
    construction_arrows: bool | None = None
    construction_colouring_is_counterexample: bool | None = None

    @property
    def confirmed(self) -> bool:
        return (
            not self.failures
            and self.graphs_checked == self.graphs_arrowing
            and self.construction_min_degree == self.threshold - 1
            and self.construction_arrows is False
        )

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "t": self.t,
            "n": self.n,
            "threshold": self.threshold,
            "mode": self.mode,
            "graphs_checked": self.graphs_checked,
            "graphs_arrowing": self.graphs_arrowing,
            "failures": self.failures,
            "per_graph": self.per_graph,
            "construction": {
                "graph6": self.construction_graph6,
                "min_degree": self.construction_min_degree,
                "arrows": self.construction_arrows,
                "colouring_is_counterexample": self.construction_colouring_is_counterexample,
            },
            "confirmed": self.confirmed,
        }


def _random_dense_graphs(n: int, max_missing_degree: int, samples: int, seed: int) -> list[Graph]:
    """Random graphs whose complement has maximum degree <= max_missing_degree."""
    import random

    rng = random.Random(seed)
    out = []
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(samples):
        rng.shuffle(pairs)
        miss = [0] * n
        removed = []
        for u, v in pairs:
            if miss[u] < max_missing_degree and miss[v] < max_missing_degree and rng.random() < 0.5:
                miss[u] += 1
                miss[v] += 1
                removed.append((u, v))
        out.append(Graph.from_edges(n, removed).complement())
    return out


def tightness_sweep(
    r: int,
    t: int,
    n: int | None = None,
    *,
    threads: int = 1,
    exhaustive_limit: int = 7,
    samples: int = 50,
    seed: int = 0,
    budget: int = 30,
) -> SweepReport:
    """Check the min-degree threshold n - ceil(t/2) at n = (r-1)(t-1)+1.

    Every candidate graph at the threshold must arrow; the extremal
    construction one below it must not.
    """
    from .census import nonisomorphic_graphs
    from .constructions import construct_example_tight_n

    order = (r - 1) * (t - 1) + 1
    if n is None:
        n = order
    if n != order:
        raise PreconditionError(f"sweep runs at n = (r-1)(t-1)+1 = {order}, got n={n}")
    threshold = n - (t + 1) // 2
    if n <= exhaustive_limit:
        mode = "exhaustive"
        candidates = [g for g in nonisomorphic_graphs(n) if min_degree(g) >= threshold]
    else:
        mode = "sampled"
        candidates = _random_dense_graphs(n, n - 1 - threshold, samples, seed)
    report = SweepReport(r, t, n, threshold, mode)
    for g in candidates:
        verdict = arrows(g, r, t, threads=threads, budget=budget)
        report.graphs_checked += 1
        report.graphs_arrowing += verdict.arrows
        report.per_graph.append(
            {"graph6": to_graph6(g), "min_degree": min_degree(g), "edges": g.num_edges, "arrows": verdict.arrows}
        )
        if not verdict.arrows:
            report.failures.append(f"{to_graph6(g)} has delta={min_degree(g)} but does not arrow")
    inst = construct_example_tight_n(r, t)
    report.construction_graph6 = to_graph6(inst.graph)
    report.construction_min_degree = min_degree(inst.graph)
    report.construction_arrows = arrows(inst.graph, r, t, threads=threads, budget=budget).arrows
    report.construction_colouring_is_counterexample = is_counterexample(inst.colouring, r, t)
    log.info("sweep r=%d t=%d n=%d: %d/%d candidates arrow", r, t, n, report.graphs_arrowing, report.graphs_checked)
    return report

