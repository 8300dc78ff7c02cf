"""Exhaustive generation of small graphs with odd girth and minimum-degree constraints.

Graphs are grown one vertex at a time; the new vertex picks its neighbours
among the earlier ones.  Without deduplication this visits every labelled
graph exactly once.  With deduplication each level is reduced to one
representative per isomorphism class before extending, which is complete
because every graph arises from (a copy of) its induced subgraph on all but
one vertex.

Pruning, valid for any vertex order:

* odd girth is inherited by induced subgraphs, and the new vertex closes an
  odd cycle of length ``odd_dist(s, t) + 2`` for neighbours ``s, t``;
* deleting ``n - m`` vertices lowers a degree by at most ``n - m``, so the
  graph on the first ``m`` vertices has minimum degree >= ``d - (n - m)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .canon import canonical_form
from .errors import TooLarge
from .graph import Graph, bits
from .parity import _search

ENUM_BOUND = 10


@dataclass(frozen=True)
class EnumerationConstraints:
    """``n`` vertices, odd girth >= ``min_odd_girth``, min degree > ``degree_num / degree_den``."""

    n: int
    min_odd_girth: int = 3
    degree_num: int = -1
    degree_den: int = 1
    dedupe: bool = True

    @classmethod
    def theorem(cls, n: int, k: int, dedupe: bool = True) -> "EnumerationConstraints":
        """Hypotheses of the structure theorem: odd girth >= 2k+1, min degree > 3n/4k."""
        return cls(n, 2 * k + 1, 3 * n, 4 * k, dedupe)

    @property
    def min_degree(self) -> int:
        """Smallest integer ``d`` with ``d * den > num``."""
        if self.degree_num < 0:
            return 0
        return self.degree_num // self.degree_den + 1

    def accepts_degree(self, delta: int) -> bool:
        return delta * self.degree_den > self.degree_num


def enumerate_graphs(c: EnumerationConstraints, bound: int = ENUM_BOUND) -> Iterator[Graph]:
    if c.n > bound:
        raise TooLarge(f"enumeration is limited to n <= {bound}, got {c.n}")
    if c.degree_den <= 0:
        raise ValueError("degree threshold denominator must be positive")
    if c.n < 0:
        raise ValueError("n must be non-negative")
    level = [Graph(0, ())]
    for m in range(c.n):
        nxt: list[Graph] | dict = {} if c.dedupe else []
        need = c.min_degree - (c.n - m - 1)
        for g in level:
            for child in _extensions(g, need, c.min_odd_girth):
                if c.dedupe:
                    nxt.setdefault(canonical_form(child), child)
                else:
                    nxt.append(child)
        if c.dedupe:
            level = [nxt[key] for key in sorted(nxt)]
        else:
            level = nxt
    for g in level:
        if c.n == 0 or c.accepts_degree(g.min_degree()):
            yield g


def _extensions(g: Graph, need: int, min_odd_girth: int) -> Iterator[Graph]:
    """Add vertex ``m = g.n`` in every admissible way; all degrees must reach ``need``."""
    m = g.n
    odd = [_search(g, s)[0][1] for s in g.vertices()]
    compat = [0] * m
    for s in range(m):
        for t in range(m):
            if t != s and odd[s][t] + 2 >= min_odd_girth:
                compat[s] |= 1 << t
    must = 0
    for v in range(m):
        deficit = need - g.degree(v)
        if deficit > 1:
            return
        if deficit == 1:
            must |= 1 << v
    for s in bits(must):
        if must & ~compat[s] & ~(1 << s):
            return

    def rec(v: int, chosen: int, allowed: int) -> Iterator[int]:
        if v == m:
            if chosen.bit_count() >= need:
                yield chosen
            return
        # not enough candidates left to reach the new vertex's degree
        if chosen.bit_count() + (allowed >> v).bit_count() < need:
            return
        bit = 1 << v
        if allowed & bit:
            yield from rec(v + 1, chosen | bit, allowed & compat[v])
        if not must & bit:
            yield from rec(v + 1, chosen, allowed)

    start = (1 << m) - 1
    for s in bits(must):
        start &= compat[s] | (1 << s)
    for nbrs in rec(0, 0, start):
        adj = list(g.adj)
        for v in bits(nbrs):
            adj[v] |= 1 << m
        adj.append(nbrs)
        yield Graph(m + 1, tuple(adj))
