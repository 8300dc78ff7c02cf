"""Immutable simple graphs over vertices ``0..n-1`` and the edge-list text format.

Adjacency is stored as one Python ``int`` bitmask per vertex, so neighbourhood
intersections in the search code are single ``&`` operations.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import IndexOutOfRange, LoopEdge, ParseError, TooLarge

DEFAULT_MAX_N = 64


def max_vertices() -> int:
    """Vertex bound for graphs, overridable through ``ODDGIRTH_MAX_N``."""
    raw = os.environ.get("ODDGIRTH_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"ODDGIRTH_MAX_N must be an integer, got {raw!r}") from None


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def min_degree(self) -> int:
        """Minimum degree; 0 for the empty graph."""
        return min(self.degrees(), default=0)

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def vertices(self) -> range:
        return range(self.n)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in extra:
            _check_pair(self.n, u, v)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for w in bits(self.adj[v]):
                if w in pos:
                    row |= 1 << pos[w]
            adj.append(row)
        return Graph(len(vertices), tuple(adj))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
    if u == v:
        raise LoopEdge(f"loop at vertex {u}")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph on ``n`` vertices; duplicate edges collapse."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    bound = max_vertices()
    if n > bound:
        raise TooLarge(f"n={n} exceeds the vertex bound {bound} (set ODDGIRTH_MAX_N)")
    adj = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def to_edge_list(g: Graph) -> str:
    """Canonical edge-list text: ``n m`` then one sorted ``u v`` line per edge."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format. Comment lines start with ``#``."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {stripped!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {stripped!r}") from None
    if not rows:
        raise ParseError("missing header line 'n m'")
    (n, m), body = rows[0], rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow")
    try:
        return build_graph(n, body)
    except (IndexOutOfRange, LoopEdge) as exc:
        raise ParseError(str(exc)) from exc
