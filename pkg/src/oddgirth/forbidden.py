"""Detectors for configurations that cannot live in edge-maximal dense graphs.

* ``find_induced_phi`` looks for an induced 6-cycle with exactly one long
  diagonal (the graph called Phi below).
* ``find_phi_prime`` looks for a ``4k``-cycle carrying three consecutive
  diagonals, the configuration a Phi blows up into.
* ``find_tetrahedron`` looks for a ``(2k+1)``-tetrahedron: a subdivided
  ``K_4`` with a center ``z`` whose three cycles through ``z`` all have
  length ``2k+1``, at least two spokes of length >= 2.

Exhaustive searches take a node ``budget``; running out raises
:class:`~oddgirth.errors.SearchBudgetExceeded`, which is never the same as
returning ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import SearchBudgetExceeded
from .graph import Graph, bits
from .parity import INF, _search, odd_girth

DEFAULT_BUDGET = 2_000_000

# Pairs of Phi positions that must NOT be adjacent in an induced copy.
PHI_NON_EDGES = ((0, 2), (0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5), (3, 5))


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class PhiWitness:
    a: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        a = self.a
        if len(a) != 6 or len(set(a)) != 6:
            return False
        if not all(g.has_edge(a[i], a[(i + 1) % 6]) for i in range(6)):
            return False
        if not g.has_edge(a[1], a[4]):
            return False
        return not any(g.has_edge(a[i], a[j]) for i, j in PHI_NON_EDGES)

    def to_record(self) -> dict:
        return {
            "kind": "phi",
            "vertices": list(self.a),
            "paths": [list(self.a) + [self.a[0]], [self.a[1], self.a[4]]],
            "lengths": {"cycle": 6, "diagonal": 1},
        }


@dataclass(frozen=True)
class PhiPrimeWitness:
    cycle: tuple[int, ...]
    diagonals: tuple[tuple[int, int], ...]

    def validate(self, g: Graph, k: int) -> bool:
        c = self.cycle
        size = 4 * k
        if len(c) != size or len(set(c)) != size:
            return False
        if not all(g.has_edge(c[i], c[(i + 1) % size]) for i in range(size)):
            return False
        if len(self.diagonals) != 3 or len(set(self.diagonals)) != 3:
            return False
        pos = {v: i for i, v in enumerate(c)}
        starts = []
        for u, v in self.diagonals:
            if u not in pos or v not in pos or not g.has_edge(u, v):
                return False
            i, j = sorted((pos[u], pos[v]))
            if j - i != 2 * k:
                return False
            starts.append(i)
        # Three consecutive diagonals (up to the cycle's rotation).
        return any(sorted((s - t) % (2 * k) for s in starts) == [0, 1, 2] for t in starts)

    def to_record(self) -> dict:
        return {
            "kind": "phi_prime",
            "vertices": list(self.cycle),
            "paths": [list(self.cycle) + [self.cycle[0]]] + [list(d) for d in self.diagonals],
            "lengths": {"cycle": len(self.cycle)},
        }


@dataclass(frozen=True)
class TetraWitness:
    """Subdivided ``K_4`` with center ``z`` and branch vertices ``a, b, c``.

    ``spokes`` run from the center to ``a``, ``b``, ``c``; ``arcs`` are the
    outer-cycle paths ``a -> b``, ``b -> c`` and ``c -> a``.
    """

    center: int
    branches: tuple[int, int, int]
    spokes: tuple[tuple[int, ...], ...]
    arcs: tuple[tuple[int, ...], ...]

    @property
    def spoke_lengths(self) -> tuple[int, int, int]:
        return tuple(len(s) - 1 for s in self.spokes)

    @property
    def arc_lengths(self) -> tuple[int, int, int]:
        return tuple(len(s) - 1 for s in self.arcs)

    @property
    def outer_cycle(self) -> tuple[int, ...]:
        ab, bc, ca = self.arcs
        return ab + bc[1:] + ca[1:-1]

    def vertex_set(self) -> set[int]:
        out = {self.center}
        for path in (*self.spokes, *self.arcs):
            out.update(path)
        return out

    def center_cycle(self, i: int, j: int) -> tuple[int, ...]:
        """Cycle through the center and branches ``i`` and ``j`` (indices 0..2)."""
        arc = _arc_between(self.arcs, i, j)
        return self.spokes[i] + arc[1:] + tuple(reversed(self.spokes[j]))[1:-1]

    def oplus_cycle(self, i: int) -> tuple[int, ...]:
        """Union of the two center cycles through branch ``i`` minus its spoke."""
        j, l = [t for t in range(3) if t != i]
        # spoke j out to branch j, arc j -> i, arc i -> l, spoke l back to the center
        path = self.spokes[j] + _arc_between(self.arcs, j, i)[1:] + _arc_between(self.arcs, i, l)[1:]
        return path + tuple(reversed(self.spokes[l]))[1:-1]

    def validate(self, g: Graph, k: int) -> bool:
        z = self.center
        a, b, c = self.branches
        if len({z, a, b, c}) != 4 or len(self.spokes) != 3 or len(self.arcs) != 3:
            return False
        ends = [(z, a), (z, b), (z, c)]
        for path, (s, t) in zip(self.spokes, ends):
            if len(path) < 2 or path[0] != s or path[-1] != t:
                return False
        for path, (s, t) in zip(self.arcs, [(a, b), (b, c), (c, a)]):
            if len(path) < 2 or path[0] != s or path[-1] != t:
                return False
        interiors: list[int] = []
        for path in (*self.spokes, *self.arcs):
            if not all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1)):
                return False
            interiors.extend(path[1:-1])
        if len(set(interiors)) != len(interiors) or set(interiors) & {z, a, b, c}:
            return False
        p, q, r = self.spoke_lengths
        x, y, w = self.arc_lengths
        odd = 2 * k + 1
        if not (p + q + x == q + r + y == r + p + w == odd):
            return False
        if sum(1 for s in (p, q, r) if s >= 2) < 2:
            return False
        outer = x + y + w
        if outer % 2 == 0:
            return False
        if outer >= odd and len(self.vertex_set()) < 4 * k:
            return False
        for i, spoke in enumerate((p, q, r)):
            cyc = self.oplus_cycle(i)
            if len(set(cyc)) != len(cyc) or len(cyc) != 4 * k + 2 - 2 * spoke:
                return False
            if not all(g.has_edge(cyc[t], cyc[(t + 1) % len(cyc)]) for t in range(len(cyc))):
                return False
        return True

    def to_record(self) -> dict:
        p, q, r = self.spoke_lengths
        x, y, w = self.arc_lengths
        return {
            "kind": "tetrahedron",
            "vertices": sorted(self.vertex_set()),
            "paths": {
                "spokes": [list(s) for s in self.spokes],
                "arcs": [list(s) for s in self.arcs],
                "outer_cycle": list(self.outer_cycle),
            },
            "lengths": {"p": p, "q": q, "r": r, "x": x, "y": y, "w": w, "outer": x + y + w},
            "center": self.center,
            "branches": list(self.branches),
        }


def _arc_between(arcs, i: int, j: int) -> tuple[int, ...]:
    """Outer-cycle path from branch ``i`` to branch ``j`` avoiding the third."""
    forward = {(0, 1): 0, (1, 2): 1, (2, 0): 2}
    if (i, j) in forward:
        return arcs[forward[(i, j)]]
    return tuple(reversed(arcs[forward[(j, i)]]))


# ---------------------------------------------------------------------------
# induced Phi


def find_induced_phi(g: Graph) -> PhiWitness | None:
    """First induced Phi, searching the diagonal ``{a1, a4}`` with ``a1 < a4``."""
    adj = g.adj
    for a1 in g.vertices():
        for a4 in bits(adj[a1] >> (a1 + 1) << (a1 + 1)):
            for a0 in bits(adj[a1] & ~adj[a4] & ~(1 << a4)):
                for a5 in bits(adj[a0] & adj[a4] & ~adj[a1] & ~(1 << a1)):
                    blocked = adj[a4] | adj[a0] | adj[a5] | _mask((a0, a1, a4, a5))
                    for a2 in bits(adj[a1] & ~blocked):
                        blocked3 = adj[a1] | adj[a0] | adj[a5] | _mask((a0, a1, a2, a4, a5))
                        for a3 in bits(adj[a2] & adj[a4] & ~blocked3):
                            return PhiWitness((a0, a1, a2, a3, a4, a5))
    return None


# ---------------------------------------------------------------------------
# exhaustive path searches shared by the Phi' and tetrahedron detectors


class _Search:
    def __init__(self, g: Graph, budget: int | None):
        self.g = g
        self.budget = budget
        self.nodes = 0
        # dist[s][parity][v]: shortest walk of that parity from s to v
        self.dist = [_search(g, s)[0] for s in g.vertices()]

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(self.budget, "forbidden-configuration search")

    def walk_ok(self, u: int, v: int, length: int) -> bool:
        """Whether a ``u``-``v`` walk of exactly ``length`` edges exists."""
        return self.dist[u][length & 1][v] <= length

    def paths(
        self,
        start: int,
        length: int,
        used: int,
        target: int | None = None,
        end_ok: Callable[[int], bool] | None = None,
        lookahead: Callable[[int, int], bool] | None = None,
    ) -> Iterator[tuple[int, ...]]:
        """Simple paths of exactly ``length`` edges from ``start``.

        Interior vertices avoid ``used``.  With ``target`` the path must end
        there; otherwise the end avoids ``used`` and passes ``end_ok``.
        ``lookahead(v, steps_left)`` prunes partial paths.
        """
        adj = self.g.adj
        path = [start]

        def rec(v: int, left: int, seen: int) -> Iterator[tuple[int, ...]]:
            self.tick()
            if left == 0:
                yield tuple(path)
                return
            if left == 1 and target is not None:
                if adj[v] >> target & 1:
                    path.append(target)
                    yield tuple(path)
                    path.pop()
                return
            for w in bits(adj[v] & ~seen):
                if target is not None:
                    if not self.walk_ok(w, target, left - 1):
                        continue
                elif left == 1 and end_ok is not None and not end_ok(w):
                    continue
                if lookahead is not None and not lookahead(w, left - 1):
                    continue
                path.append(w)
                yield from rec(w, left - 1, seen | (1 << w))
                path.pop()

        forbidden = used | (1 << start)
        if target is not None:
            forbidden |= 1 << target
        if target is not None and not self.walk_ok(start, target, length):
            return
        yield from rec(start, length, forbidden)


# ---------------------------------------------------------------------------
# Phi'


def find_phi_prime(g: Graph, k: int, budget: int | None = DEFAULT_BUDGET) -> PhiPrimeWitness | None:
    """A ``4k``-cycle ``c_0 .. c_{4k-1}`` with diagonals at positions 0, 1 and 2.

    Enumerates the six diagonal ends ``a0 a1 a2`` / ``a5 a4 a3`` first, then
    two disjoint connecting paths of length ``2k-2``.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    s = _Search(g, budget)
    adj = g.adj
    inner = 2 * k - 2
    for a1 in g.vertices():
        for a0 in bits(adj[a1]):
            for a2 in bits(adj[a1] & ~(1 << a0)):
                for a5 in bits(adj[a0] & ~_mask((a1, a2))):
                    for a4 in bits(adj[a1] & adj[a5] & ~_mask((a0, a2))):
                        for a3 in bits(adj[a2] & adj[a4] & ~_mask((a0, a1, a5))):
                            s.tick()
                            six = _mask((a0, a1, a2, a3, a4, a5))
                            for p25 in s.paths(a2, inner, six, target=a5):
                                used = six | _mask(p25)
                                for p30 in s.paths(a3, inner, used, target=a0):
                                    cycle = (a0, a1) + p25 + (a4,) + p30[:-1]
                                    return PhiPrimeWitness(cycle, ((a0, a5), (a1, a4), (a2, a3)))
    return None


# ---------------------------------------------------------------------------
# (2k+1)-tetrahedra


def spoke_length_tuples(k: int, max_total: int) -> list[tuple[int, int, int]]:
    """Admissible ``(p, q, r)`` ordered by sum, then lexicographically."""
    odd = 2 * k + 1
    out = []
    for p in range(1, odd):
        for q in range(1, odd):
            for r in range(1, odd):
                if p + q + r > max_total:
                    continue
                if min(odd - p - q, odd - q - r, odd - r - p) < 1:
                    continue
                if sum(1 for t in (p, q, r) if t >= 2) < 2:
                    continue
                out.append((p, q, r))
    return sorted(out, key=lambda t: (sum(t), t))


def find_tetrahedron(
    g: Graph,
    k: int,
    budget: int | None = DEFAULT_BUDGET,
    short_outer_pruning: bool | None = None,
) -> TetraWitness | None:
    """First ``(2k+1)``-tetrahedron contained in ``g`` as a subgraph.

    Search order: centers ascending, then spoke lengths ``(p, q, r)`` by
    ascending sum, then branch vertices ``a < b < c`` in the order the path
    search meets them.  Requiring ``a < b < c`` visits every (tetrahedron,
    center) pair once.  When ``g`` has odd girth >= ``2k+1`` the outer cycle
    is an odd cycle of ``g``, so its length is at least ``2k+1``; this caps
    ``p + q + r`` at ``2k+1``.  ``short_outer_pruning=None`` enables the cap
    exactly in that case.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    odd = 2 * k + 1
    if short_outer_pruning is None:
        short_outer_pruning = odd_girth(g) >= odd
    # outer = 3(2k+1) - 2(p+q+r) must stay >= 3 (or >= 2k+1 under pruning)
    max_total = odd if short_outer_pruning else 3 * k
    tuples = spoke_length_tuples(k, max_total)
    s = _Search(g, budget)
    # every vertex of a tetrahedron lies on one of its (2k+1)-cycles
    outside = 0
    for v in g.vertices():
        if s.dist[v][1][v] > odd:
            outside |= 1 << v
    for z in g.vertices():
        if g.degree(z) < 3 or outside >> z & 1:
            continue
        for p, q, r in tuples:
            x, y, w = odd - p - q, odd - q - r, odd - r - p
            found = _tetra_at(s, z, (p, q, r), (x, y, w), outside)
            if found is not None:
                return found
    return None


def _tetra_at(
    s: _Search, z: int, spokes: tuple[int, int, int], arcs: tuple[int, int, int], outside: int
) -> TetraWitness | None:
    p, q, r = spokes
    x, y, w = arcs
    zmask = (1 << z) | outside
    # a spoke vertex with ``left`` steps to go must close both of its center cycles
    for sa in s.paths(
        z, p, zmask,
        lookahead=lambda v, left: s.walk_ok(v, z, left + x + q) and s.walk_ok(v, z, left + w + r),
    ):
        a = sa[-1]
        used_a = zmask | _mask(sa)
        for sb in s.paths(
            z, q, used_a,
            end_ok=lambda b: b > a,
            lookahead=lambda v, left: s.walk_ok(v, a, left + x) and s.walk_ok(v, z, left + y + r),
        ):
            b = sb[-1]
            used_b = used_a | _mask(sb)
            for ab in s.paths(a, x, used_b, target=b):
                used_x = used_b | _mask(ab)
                for sc in s.paths(
                    z, r, used_x,
                    end_ok=lambda c: c > b,
                    lookahead=lambda v, left: s.walk_ok(v, b, left + y) and s.walk_ok(v, a, left + w),
                ):
                    c = sc[-1]
                    used_c = used_x | _mask(sc)
                    for bc in s.paths(b, y, used_c, target=c):
                        used_y = used_c | _mask(bc)
                        for ca in s.paths(c, w, used_y, target=a):
                            return TetraWitness(z, (a, b, c), (sa, sb, sc), (ab, bc, ca))
    return None


__all__ = [
    "DEFAULT_BUDGET",
    "INF",
    "PhiPrimeWitness",
    "PhiWitness",
    "TetraWitness",
    "find_induced_phi",
    "find_phi_prime",
    "find_tetrahedron",
    "spoke_length_tuples",
]
