"""Edge-maximal supergraphs with prescribed odd girth.

For a parameter ``k`` a graph of odd girth at least ``2k+1`` is
*edge-maximal* when joining any non-adjacent pair creates an odd cycle of
length at most ``2k-1``.  ``saturate`` adds edges greedily until that holds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .parity import _search, check_odd_girth, odd_girth
from .rng import XorShift64Star


@dataclass(frozen=True)
class SaturationOrder:
    """Order in which candidate pairs are offered to ``saturate``.

    ``seed=None`` is lexicographic order over ``(u, v)`` with ``u < v``;
    otherwise the lexicographic list is shuffled by ``XorShift64Star(seed)``.
    """

    seed: int | None = None

    @classmethod
    def lexicographic(cls) -> "SaturationOrder":
        return cls(None)

    @classmethod
    def seeded(cls, seed: int) -> "SaturationOrder":
        return cls(seed)

    @property
    def kind(self) -> str:
        return "lexicographic" if self.seed is None else "seeded-random"

    def pairs(self, n: int) -> list[tuple[int, int]]:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        if self.seed is not None:
            XorShift64Star(self.seed).shuffle(pairs)
        return pairs


LEX = SaturationOrder.lexicographic()


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")


def saturate(g: Graph, k: int, order: SaturationOrder = LEX) -> Graph:
    """Edge-maximal supergraph of ``g`` with odd girth still at least ``2k+1``.

    One pass over the pairs suffices: even distances only shrink as edges
    are added, so a pair rejected once stays rejected.
    """
    _check_k(k)
    check_odd_girth(g, k)
    adj = list(g.adj)
    work = Graph(g.n, tuple(adj))
    cache: dict[int, list[float]] = {}
    for u, v in order.pairs(g.n):
        if adj[u] >> v & 1:
            continue
        even = cache.get(u)
        if even is None:
            even = cache[u] = _search(work, u)[0][0]
        if even[v] <= 2 * k - 2:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        work = Graph(g.n, tuple(adj))
        cache.clear()
    return work


def non_maximal_pair(g: Graph, k: int) -> tuple[int, int] | None:
    """First non-edge (lexicographically) that can be added without a short odd cycle."""
    for u in g.vertices():
        even = _search(g, u)[0][0]
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and even[v] > 2 * k - 2:
                return (u, v)
    return None


def is_edge_maximal(g: Graph, k: int) -> bool:
    _check_k(k)
    check_odd_girth(g, k)
    return non_maximal_pair(g, k) is None


def meets_degree_threshold(g: Graph, k: int) -> bool:
    """``min degree > 3n/(4k)`` in exact integer arithmetic."""
    return 4 * k * g.min_degree() > 3 * g.n


def in_class_G(g: Graph, k: int) -> bool:
    """Membership in the class of edge-maximal, high-minimum-degree graphs of odd girth >= 2k+1."""
    _check_k(k)
    if odd_girth(g) < 2 * k + 1 or not meets_degree_threshold(g, k):
        return False
    return non_maximal_pair(g, k) is None
