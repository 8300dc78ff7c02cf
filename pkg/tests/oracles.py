"""Slow, obviously-correct reference implementations used to cross-check the package.

Nothing here imports the search code under test; graphs are handled as plain
``(n, set_of_edges)`` data pulled out of :class:`oddgirth.graph.Graph`.
"""

from __future__ import annotations

import itertools
import math
import random

import numpy as np

from oddgirth.graph import Graph, build_graph


def edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def neighbours(g: Graph) -> list[set[int]]:
    out = [set() for _ in range(g.n)]
    for u, v in g.edges():
        out[u].add(v)
        out[v].add(u)
    return out


def has_cycle_of_length(g: Graph, length: int) -> bool:
    """Simple cycle of exactly ``length`` edges, by DFS from its smallest vertex."""
    nb = neighbours(g)

    def dfs(start, v, depth, seen):
        if depth == length - 1:
            return start in nb[v]
        for w in nb[v]:
            if w > start and w not in seen:
                seen.add(w)
                if dfs(start, w, depth + 1, seen):
                    return True
                seen.discard(w)
        return False

    return any(dfs(s, s, 0, {s}) for s in range(g.n))


def odd_girth_by_cycles(g: Graph) -> float:
    for length in range(3, g.n + 1, 2):
        if has_cycle_of_length(g, length):
            return length
    return math.inf


def odd_girth_after_adding(g: Graph, u: int, v: int) -> float:
    return odd_girth_by_cycles(g.with_edges([(u, v)]))


PHI_EDGES = [(i, (i + 1) % 6) for i in range(6)] + [(1, 4)]


def _phi_masks() -> set[int]:
    pairs = list(itertools.combinations(range(6), 2))
    index = {p: i for i, p in enumerate(pairs)}
    masks = set()
    for perm in itertools.permutations(range(6)):
        m = 0
        for u, v in PHI_EDGES:
            a, b = sorted((perm[u], perm[v]))
            m |= 1 << index[(a, b)]
        masks.add(m)
    return masks


PHI_MASKS = _phi_masks()


def has_induced_phi_naive(g: Graph) -> bool:
    """Check every 6-subset against all labelled copies of Phi."""
    es = edge_set(g)
    for subset in itertools.combinations(range(g.n), 6):
        m = 0
        for i, (a, b) in enumerate(itertools.combinations(subset, 2)):
            if frozenset((a, b)) in es:
                m |= 1 << i
        if m in PHI_MASKS:
            return True
    return False


def has_hom_bruteforce(g: Graph, h: Graph) -> bool:
    es = edge_set(h)
    edges = g.edges()
    for images in itertools.product(range(h.n), repeat=g.n):
        if all(frozenset((images[u], images[v])) in es for u, v in edges):
            return True
    return False


def automorphism_count(g: Graph) -> int:
    es = edge_set(g)
    return sum(
        1
        for perm in itertools.permutations(range(g.n))
        if all(frozenset((perm[u], perm[v])) in es for u, v in g.edges())
    )


def independence_number(g: Graph) -> int:
    es = edge_set(g)
    for size in range(g.n, 0, -1):
        for subset in itertools.combinations(range(g.n), size):
            if all(frozenset(p) not in es for p in itertools.combinations(subset, 2)):
                return size
    return 0


def labelled_count(n: int, min_odd_girth: int, min_degree: int = 0) -> int:
    """Labelled graphs on ``n`` vertices with the constraints, by vectorised brute force.

    Only ``min_odd_girth`` in {3, 5} is supported (5 means triangle-free),
    which covers every graph on at most 6 vertices and the n=7 cases used.
    """
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    codes = np.arange(1 << len(pairs), dtype=np.int64)
    keep = np.ones(codes.shape, dtype=bool)
    if min_odd_girth >= 5:
        for tri in itertools.combinations(range(n), 3):
            m = sum(1 << index[p] for p in itertools.combinations(tri, 2))
            keep &= (codes & m) != m
    if min_odd_girth > 5:
        raise ValueError("oracle only supports odd girth thresholds 3 and 5")
    if min_degree > 0:
        for v in range(n):
            deg = np.zeros(codes.shape, dtype=np.int64)
            for p, i in index.items():
                if v in p:
                    deg += (codes >> i) & 1
            keep &= deg >= min_degree
    return int(keep.sum())


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_graph_with_odd_girth(rng: random.Random, n: int, k: int, tries: int | None = None) -> Graph:
    """Random edge insertion, skipping edges that would create an odd cycle < 2k+1."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    tries = len(pairs) if tries is None else tries
    g = build_graph(n, [])
    for u, v in pairs[:tries]:
        cand = g.with_edges([(u, v)])
        if odd_girth_by_cycles(cand) >= 2 * k + 1:
            g = cand
    return g


def simple_paths(g: Graph, start: int, max_len: int) -> list[tuple[int, ...]]:
    """Every simple path from ``start`` with 1..max_len edges."""
    nb = neighbours(g)
    out = []

    def walk(path):
        if len(path) > 1:
            out.append(tuple(path))
        if len(path) - 1 == max_len:
            return
        for w in sorted(nb[path[-1]]):
            if w not in path:
                path.append(w)
                walk(path)
                path.pop()

    walk([start])
    return out


def has_tetrahedron_naive(g: Graph, k: int) -> bool:
    """Subdivided K_4 whose three cycles through the center all have length 2k+1.

    Tries every center and every triple of pairwise disjoint spoke paths,
    then looks for the three connecting arcs among all simple paths,
    insisting that all six paths are internally disjoint.
    """
    odd = 2 * k + 1
    for z in range(g.n):
        spokes = simple_paths(g, z, odd - 2)
        for ia, sa in enumerate(spokes):
            set_a = set(sa)
            for ib in range(ia + 1, len(spokes)):
                sb = spokes[ib]
                if set_a & set(sb[1:]):
                    continue
                set_ab = set_a | set(sb)
                for sc in spokes[ib + 1:]:
                    if set_ab & set(sc[1:]):
                        continue
                    lens = [len(sa) - 1, len(sb) - 1, len(sc) - 1]
                    if sum(1 for t in lens if t >= 2) < 2:
                        continue
                    need = [(0, 1), (1, 2), (2, 0)]
                    if any(odd - lens[i] - lens[j] < 1 for i, j in need):
                        continue
                    ends = (sa[-1], sb[-1], sc[-1])
                    if _arcs(g, ends, lens, need, set_ab | set(sc), odd):
                        return True
    return False


def _arcs(g, ends, lens, need, used, odd) -> bool:
    if not need:
        return True
    (i, j), rest = need[0], need[1:]
    length = odd - lens[i] - lens[j]
    for path in _paths_between(g, ends[i], ends[j], length, used):
        if _arcs(g, ends, lens, rest, used | set(path[1:-1]), odd):
            return True
    return False


def _paths_between(g: Graph, s: int, t: int, length: int, avoid: set[int]):
    nb = neighbours(g)

    def walk(path):
        v = path[-1]
        for w in sorted(nb[v]):
            if len(path) == length:
                if w == t:
                    yield tuple(path + [w])
            elif w not in avoid and w not in path:
                path.append(w)
                yield from walk(path)
                path.pop()

    yield from walk([s])


def has_phi_prime_naive(g: Graph, k: int) -> bool:
    """A 4k-cycle carrying three consecutive long diagonals, by cycle enumeration."""
    size = 4 * k
    nb = neighbours(g)
    es = edge_set(g)

    def has_diagonals(c):
        return any(
            all(frozenset((c[(t + i) % size], c[(t + i + 2 * k) % size])) in es for i in range(3))
            for t in range(size)
        )

    def dfs(path):
        v = path[-1]
        if len(path) == size:
            return path[0] in nb[v] and has_diagonals(path)
        for w in nb[v]:
            if w > path[0] and w not in path:
                path.append(w)
                if dfs(path):
                    return True
                path.pop()
        return False

    return any(dfs([s]) for s in range(g.n))
