"""Graph and colouring data model.

Vertices are the integers ``0..n-1``; adjacency is one Python ``int`` bitset
per vertex.  Graphs and colourings are immutable once built.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import Graph6Error, PreconditionError

Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    # -- queries ----------------------------------------------------------
    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbours(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @cached_property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def induced_subgraph(self, vertices: int | Iterable[int]) -> tuple["Graph", list[int]]:
        """Restrict to a vertex set (bitset or iterable).

        Returns the subgraph on ``0..|s|-1`` and ``index_map`` with
        ``index_map[new] == old``.
        """
        mask = vertices if isinstance(vertices, int) else to_mask(vertices)
        if mask & ~self.vertex_mask:
            raise PreconditionError("vertex set not contained in the graph")
        index_map = list(bits(mask))
        new_index = {old: new for new, old in enumerate(index_map)}
        adj = []
        for old in index_map:
            row = 0
            for w in bits(self.adj[old] & mask):
                row |= 1 << new_index[w]
            adj.append(row)
        return Graph(len(index_map), tuple(adj)), index_map

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for w in bits(frontier):
                    nxt |= self.adj[w]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(list(bits(comp)))
        return out

    def is_path(self, seq: Sequence[int]) -> bool:
        if len(set(seq)) != len(seq) or any(not 0 <= v < self.n for v in seq):
            return False
        return all(self.has_edge(a, b) for a, b in zip(seq, seq[1:]))

    def to_dot(self, colouring: "EdgeColouring | None" = None, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines.extend(f"  {v};" for v in range(self.n))
        for u, v in self.edges():
            attr = ""
            if colouring is not None:
                attr = ' [color="red"]' if colouring.is_red(u, v) else ' [color="blue"]'
            lines.append(f"  {u} -- {v}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise PreconditionError("empty graph")
    return min(row.bit_count() for row in g.adj)


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise PreconditionError("empty graph")
    return max(row.bit_count() for row in g.adj)


def induced_subgraph(g: Graph, s: int | Iterable[int]) -> tuple[Graph, list[int]]:
    return g.induced_subgraph(s)


# ---------------------------------------------------------------------------
# colourings


class Colour(str, Enum):
    RED = "red"
    BLUE = "blue"


@dataclass(frozen=True)
class EdgeColouring:
    """Red/blue colouring of ``graph``; only the red edges are stored."""

    graph: Graph
    red: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        canon = frozenset(canonical_edge(u, v) for u, v in self.red)
        for u, v in canon:
            if not (0 <= u < self.graph.n and 0 <= v < self.graph.n) or not self.graph.has_edge(u, v):
                raise ValueError(f"red edge ({u}, {v}) is not an edge of the graph")
        object.__setattr__(self, "red", canon)

    @classmethod
    def all_red(cls, g: Graph) -> "EdgeColouring":
        return cls(g, frozenset(g.edges()))

    @classmethod
    def all_blue(cls, g: Graph) -> "EdgeColouring":
        return cls(g, frozenset())

    @classmethod
    def from_index(cls, g: Graph, index: int, edges: Sequence[Edge] | None = None) -> "EdgeColouring":
        """Colouring number ``index``: edge ``j`` (lexicographic order) is red iff bit ``j`` is set."""
        edges = g.edges() if edges is None else edges
        return cls(g, frozenset(e for j, e in enumerate(edges) if index >> j & 1))

    def index(self) -> int:
        return sum(1 << j for j, e in enumerate(self.graph.edges()) if e in self.red)

    def is_red(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.red

    def is_blue(self, u: int, v: int) -> bool:
        return self.graph.has_edge(u, v) and canonical_edge(u, v) not in self.red

    @cached_property
    def red_graph(self) -> Graph:
        return Graph.from_edges(self.graph.n, self.red)

    @cached_property
    def blue_graph(self) -> Graph:
        red = self.red_graph
        return Graph(self.graph.n, tuple(g & ~r for g, r in zip(self.graph.adj, red.adj)))

    @property
    def blue(self) -> frozenset[Edge]:
        return frozenset(e for e in self.graph.edges() if e not in self.red)

    def restrict(self, index_map: Sequence[int]) -> "EdgeColouring":
        """Colouring of the induced subgraph described by ``index_map``."""
        sub, _ = self.graph.induced_subgraph(index_map)
        pos = {old: new for new, old in enumerate(index_map)}
        red = [
            (pos[u], pos[v]) for u, v in self.red if u in pos and v in pos
        ]
        return EdgeColouring(sub, frozenset(red))

    def to_json(self) -> dict:
        return {"n": self.graph.n, "red": [list(e) for e in sorted(self.red)]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, g: Graph, data: dict | str) -> "EdgeColouring":
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("n") != g.n:
            raise PreconditionError(f"colouring is for n={data.get('n')}, graph has n={g.n}")
        red = []
        for pair in data.get("red", []):
            if len(pair) != 2:
                raise PreconditionError(f"bad red edge entry {pair!r}")
            u, v = int(pair[0]), int(pair[1])
            if u >= v:
                raise PreconditionError(f"red edge [{u}, {v}] is not in canonical u<v form")
            red.append((u, v))
        try:
            return cls(g, frozenset(red))
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None


def colour_degree(c: EdgeColouring, v: int, colour: Colour | str) -> int:
    if not 0 <= v < c.graph.n:
        raise PreconditionError(f"vertex {v} out of range for n={c.graph.n}")
    colour = Colour(colour)
    g = c.red_graph if colour is Colour.RED else c.blue_graph
    return g.degree(v)


# ---------------------------------------------------------------------------
# witnesses and parameters


class WitnessKind(str, Enum):
    RED_CLIQUE = "RedClique"
    BLUE_PATH = "BluePath"


@dataclass(frozen=True)
class Witness:
    kind: WitnessKind
    vertices: tuple[int, ...]

    @classmethod
    def red_clique(cls, vertices: Iterable[int]) -> "Witness":
        return cls(WitnessKind.RED_CLIQUE, tuple(sorted(vertices)))

    @classmethod
    def blue_path(cls, vertices: Iterable[int]) -> "Witness":
        return cls(WitnessKind.BLUE_PATH, tuple(vertices))

    def lift(self, index_map: Sequence[int]) -> "Witness":
        lifted = tuple(index_map[v] for v in self.vertices)
        if self.kind is WitnessKind.RED_CLIQUE:
            lifted = tuple(sorted(lifted))
        return Witness(self.kind, lifted)

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class RamseyParams:
    r: int
    t: int
    k: int = 1
    s: int | None = None

    def __post_init__(self):
        if self.r < 2 or self.t < 2 or self.k < 1:
            raise PreconditionError(f"need r >= 2, t >= 2, k >= 1 (got r={self.r}, t={self.t}, k={self.k})")
        if self.s is not None and not 1 <= self.s <= 2 * (self.t - 1):
            raise PreconditionError(f"s={self.s} outside 1..{2 * (self.t - 1)}")

    @classmethod
    def for_order(cls, n: int, t: int, k: int, r: int = 3) -> "RamseyParams":
        """Parameters with ``n = 2(t-1)k + s``."""
        return cls(r=r, t=t, k=k, s=n - 2 * (t - 1) * k)


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("latin-1")
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    data = [ord(ch) for ch in text]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside printable range 63..126", pos)
    if not data:
        raise Graph6Error("empty input", 0)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise Graph6Error("truncated vertex count", len(data))
        n, pos = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63), 4
    else:
        if len(data) < 8:
            raise Graph6Error("truncated vertex count", len(data))
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    have = len(data) - pos
    if have < need:
        raise Graph6Error(f"expected {need} adjacency bytes for n={n}, got {have}", len(data))
    if have > need:
        raise Graph6Error("trailing garbage", pos + need)
    adj = [0] * n
    k = 0
    body = data[pos:]
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if k % 6 and (body[-1] - 63) & ((1 << (6 - k % 6)) - 1):
        raise Graph6Error("nonzero padding bits", pos + need - 1)
    return Graph(n, tuple(adj))
