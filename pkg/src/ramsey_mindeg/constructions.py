"""Extremal graphs that fail to arrow (K_r, P_t) just below the degree threshold."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvariantViolation, PreconditionError
from .graph import EdgeColouring, Graph, min_degree, to_mask
from .oracle import find_clique
from .paths import has_path_on


@dataclass(frozen=True)
class ConstructedInstance:
    graph: Graph
    colouring: EdgeColouring
    parts: list[list[int]]
    claimed_min_degree: int
    # the Turán-level groups A_i for the large-n family; one group per part otherwise
    groups: list[list[int]] = field(default_factory=list)

    def parts_json(self) -> dict:
        return {"parts": self.parts, "groups": self.groups, "claimed_min_degree": self.claimed_min_degree}

    def self_check(self, r: int, t: int) -> None:
        """Structural certificate that the colouring has no red K_r / blue P_t."""
        if min_degree(self.graph) != self.claimed_min_degree:
            raise InvariantViolation(
                f"min degree {min_degree(self.graph)} != claimed {self.claimed_min_degree}"
            )
        where = {v: i for i, p in enumerate(self.parts) for v in p}
        for u, v in self.graph.edges():
            same = where[u] == where[v]
            if same != self.colouring.is_blue(u, v):
                raise InvariantViolation(f"edge {u}-{v} has the wrong colour for its parts")
        if max(len(p) for p in self.parts) > t - 1:
            raise InvariantViolation("a blue clique has t or more vertices")
        group_of = {v: i for i, grp in enumerate(self.groups) for v in grp}
        if any(group_of[u] == group_of[v] for u, v in self.colouring.red):
            raise InvariantViolation("red graph is not partite over the groups")
        if len(self.groups) >= r:
            raise InvariantViolation(f"red graph has {len(self.groups)} classes, needs at most {r - 1}")


def balanced_sizes(total: int, count: int) -> list[int]:
    """``count`` sizes summing to ``total``, larger ones first, differing by <= 1."""
    q, rem = divmod(total, count)
    return [q + 1] * rem + [q] * (count - rem)


def _assemble(n: int, blue_parts: list[list[int]], groups: list[list[int]]) -> tuple[Graph, EdgeColouring]:
    group_of = {v: i for i, grp in enumerate(groups) for v in grp}
    blue = [e for p in blue_parts for e in combinations(p, 2)]
    red = [(u, v) for u in range(n) for v in range(u + 1, n) if group_of[u] != group_of[v]]
    g = Graph.from_edges(n, blue + red)
    return g, EdgeColouring(g, frozenset(red))


def construct_example_tight_n(r: int, t: int) -> ConstructedInstance:
    """K_n minus a complete bipartite graph K_{ceil(t/2), floor(t/2)}, with
    n = (r-1)(t-1)+1 and blue cliques on the parts."""
    if r < 3:
        raise PreconditionError("r < 3: use Dirac regime")
    if t < 2:
        raise PreconditionError("t must be at least 2")
    sizes = [t - 1] * (r - 2) + [(t + 1) // 2, t // 2]
    n = sum(sizes)
    parts, start = [], 0
    for size in sizes:
        parts.append(list(range(start, start + size)))
        start += size
    # the last two parts share a red class, and the pairs between them are not edges
    groups = parts[:-2] + [parts[-2] + parts[-1]]
    g, c = _assemble(n, parts, groups)
    inst = ConstructedInstance(g, c, parts, n - (t + 1) // 2 - 1, groups)
    inst.self_check(r, t)
    return inst


def large_n_band(r: int, t: int, k: int) -> range:
    lo = (r - 1) * (t - 1) * k
    return range(lo + 1, (r - 1) * (t - 1) * (k + 1) + 1)


def large_n_min_degree(r: int, k: int, n: int) -> int:
    c = -(-n // (r - 1))
    return n - (k * c + k) // (k + 1) - 1


def construct_example_large_n(r: int, t: int, k: int, n: int) -> ConstructedInstance:
    """Turán graph T_{r-1}(n) with k+1 blue cliques placed in every part."""
    if r < 3 or t < 2 or k < 1:
        raise PreconditionError(f"need r >= 3, t >= 2, k >= 1 (got r={r}, t={t}, k={k})")
    band = large_n_band(r, t, k)
    if n not in band:
        raise PreconditionError(f"n={n} outside ({band.start - 1}, {band.stop - 1}]")
    groups, parts, start = [], [], 0
    for size in balanced_sizes(n, r - 1):
        group = list(range(start, start + size))
        groups.append(group)
        offset = start
        for sub in balanced_sizes(size, k + 1):
            if sub:
                parts.append(list(range(offset, offset + sub)))
            offset += sub
        start += size
    g, c = _assemble(n, parts, groups)
    inst = ConstructedInstance(g, c, parts, large_n_min_degree(r, k, n), groups)
    inst.self_check(r, t)
    return inst


def verify_not_arrowing(inst: ConstructedInstance, r: int, t: int) -> bool:
    """Direct search on the colouring itself (independent of the structure)."""
    red, blue = inst.colouring.red_graph, inst.colouring.blue_graph
    return find_clique(red, r) is None and not any(
        has_path_on(blue, t, to_mask(p)) for p in blue.components()
    )
