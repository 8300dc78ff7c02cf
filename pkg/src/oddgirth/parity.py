"""Shortest walks of each parity, odd girth and short-odd-cycle tests.

A breadth-first search over the states ``(vertex, parity of walk length)``
gives, for one source, the shortest even and the shortest odd walk to every
vertex.  ``math.inf`` marks "no walk of that parity".
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .errors import GirthTooSmall, IndexOutOfRange, PreconditionViolated
from .graph import Graph, bits

INF = math.inf


@dataclass(frozen=True)
class ParityDistances:
    source: int
    even: tuple[float, ...]
    odd: tuple[float, ...]

    def by_parity(self, parity: int) -> tuple[float, ...]:
        return self.odd if parity & 1 else self.even


@dataclass(frozen=True)
class OddCycleWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def validate(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) % 2 == 0 or len(set(vs)) != len(vs):
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def _search(g: Graph, source: int) -> tuple[list[list[float]], list[list[int]]]:
    dist: list[list[float]] = [[INF] * g.n, [INF] * g.n]
    parent = [[-1] * g.n, [-1] * g.n]
    dist[0][source] = 0
    queue = deque([(source, 0)])
    while queue:
        v, p = queue.popleft()
        d = dist[p][v] + 1
        q = p ^ 1
        for w in bits(g.adj[v]):
            if dist[q][w] == INF:
                dist[q][w] = d
                parent[q][w] = v
                queue.append((w, q))
    return dist, parent


def parity_bfs(g: Graph, source: int) -> ParityDistances:
    if not 0 <= source < g.n:
        raise IndexOutOfRange(f"source {source} outside [0, {g.n})")
    dist, _ = _search(g, source)
    return ParityDistances(source, tuple(dist[0]), tuple(dist[1]))


def parity_table(g: Graph) -> list[ParityDistances]:
    """``parity_bfs`` from every vertex."""
    return [parity_bfs(g, s) for s in g.vertices()]


def odd_girth(g: Graph) -> float:
    """Length of a shortest odd cycle, ``inf`` when ``g`` is bipartite.

    A shortest odd closed walk is always an odd cycle, so the minimum of the
    odd self-distances over all sources is the odd girth.
    """
    best = INF
    for s in g.vertices():
        d = _search(g, s)[0][1][s]
        if d < best:
            best = d
    return best


def is_bipartite(g: Graph) -> bool:
    return odd_girth(g) == INF


def two_colouring(g: Graph) -> list[int] | None:
    """A proper 2-colouring (smallest vertex of each component gets 0)."""
    colour = [-1] * g.n
    for s in g.vertices():
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in bits(g.adj[v]):
                if colour[w] < 0:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    return colour


def shortest_odd_cycle(g: Graph) -> OddCycleWitness | None:
    """A shortest odd cycle, from the smallest source attaining the odd girth."""
    best, best_source = INF, -1
    for s in g.vertices():
        d = _search(g, s)[0][1][s]
        if d < best:
            best, best_source = d, s
    if best == INF:
        return None
    _, parent = _search(g, best_source)
    walk = [best_source]
    v, p = best_source, 1
    for _ in range(int(best)):
        v = parent[p][v]
        p ^= 1
        walk.append(v)
    assert walk[-1] == best_source
    witness = OddCycleWitness(tuple(reversed(walk[1:])))
    assert witness.validate(g), "a shortest odd closed walk must be a cycle"
    return witness


def even_distance(g: Graph, u: int, v: int) -> float:
    return _search(g, u)[0][0][v]


def check_odd_girth(g: Graph, k: int) -> None:
    og = odd_girth(g)
    if og < 2 * k + 1:
        raise GirthTooSmall(f"odd girth {og} is below 2k+1 = {2 * k + 1}")


def creates_short_odd_cycle(g: Graph, u: int, v: int, k: int) -> bool:
    """Whether joining the non-adjacent ``u, v`` closes an odd cycle of length <= 2k-1.

    Requires odd girth >= 2k+1.  Under that hypothesis an even ``u``-``v``
    walk of length <= 2k-2 reduces to an even path of no greater length, so
    the shortest even walk decides the question.
    """
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexOutOfRange(f"pair ({u}, {v}) outside [0, {g.n})")
    if u == v:
        raise PreconditionViolated("u and v must be distinct")
    if g.has_edge(u, v):
        raise PreconditionViolated(f"{{{u}, {v}}} is already an edge")
    check_odd_girth(g, k)
    return even_distance(g, u, v) <= 2 * k - 2
