"""Homomorphism search, blow-up recognition and the constructive C_{2k+1} colouring.

``find_hom`` is a plain backtracking oracle.  ``constructive_c_hom`` never
backtracks: it saturates the input, seeds a blow-up of ``C_{2k+1}`` with a
shortest odd cycle and absorbs the remaining vertices one at a time, each
placement being forced by the neighbour classes of the vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .canon import ISO_BOUND, vertex_orbits
from .errors import (
    HypothesisViolated,
    IndexOutOfRange,
    InternalContradiction,
    InvalidCertificate,
    ParseError,
    SearchBudgetExceeded,
)
from .generators import gen_complete, gen_cycle
from .graph import Graph, bits
from .parity import INF, _search, odd_girth, shortest_odd_cycle, two_colouring
from .saturation import LEX, SaturationOrder, saturate


@dataclass(frozen=True)
class HomCertificate:
    map: tuple[int, ...]
    target: Graph
    target_id: str = ""

    def validate(self, g: Graph) -> bool:
        return verify_hom(g, self.target, self.map)

    def to_text(self) -> str:
        return f"hom {len(self.map)} {self.target.n}\n" + " ".join(map(str, self.map)) + "\n"


def parse_certificate(text: str, target: Graph, target_id: str = "") -> HomCertificate:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 3 or lines[0][0] != "hom":
        raise ParseError("certificate must start with 'hom n m_target'")
    try:
        n, nt = int(lines[0][1]), int(lines[0][2])
        images = [int(t) for t in lines[1]] if len(lines) > 1 else []
    except ValueError:
        raise ParseError("certificate fields must be integers") from None
    if len(images) != n:
        raise ParseError(f"certificate announces {n} images, found {len(images)}")
    if nt != target.n:
        raise ParseError(f"certificate targets a graph on {nt} vertices, target has {target.n}")
    return HomCertificate(tuple(images), target, target_id)


@dataclass(frozen=True)
class BlowupDecomposition:
    classes: tuple[tuple[int, ...], ...]
    base: Graph

    def class_map(self, n: int) -> list[int]:
        out = [-1] * n
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out

    def validate(self, g: Graph) -> bool:
        """Non-empty independent classes covering ``V(g)`` that realise ``g`` as a blow-up of ``base``."""
        if len(self.classes) != self.base.n or any(not c for c in self.classes):
            return False
        seen = [v for c in self.classes for v in c]
        if sorted(seen) != list(range(g.n)):
            return False
        cmap = self.class_map(g.n)
        for u in g.vertices():
            for v in g.vertices():
                if u == v:
                    continue
                if g.has_edge(u, v) != self.base.has_edge(cmap[u], cmap[v]):
                    return False
        return True

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def to_text(self) -> str:
        return "".join(" ".join(map(str, c)) + "\n" for c in self.classes)


def verify_hom(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    if len(mapping) != g.n:
        raise IndexOutOfRange(f"map has length {len(mapping)}, expected {g.n}")
    if any(not 0 <= x < h.n for x in mapping):
        raise IndexOutOfRange(f"map values must lie in [0, {h.n})")
    return all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges())


def _search_order(g: Graph) -> list[int]:
    """BFS order, each component started from its highest-degree vertex."""
    order: list[int] = []
    placed = 0
    degrees = g.degrees()
    while len(order) < g.n:
        root = max((v for v in g.vertices() if not placed >> v & 1), key=lambda v: (degrees[v], -v))
        queue = [root]
        placed |= 1 << root
        for v in queue:
            order.append(v)
            for w in bits(g.adj[v] & ~placed):
                placed |= 1 << w
                queue.append(w)
    return order


class _HomSearch:
    """Backtracking over ``V(g) -> V(h)`` with forward checking.

    Every assignment ``u -> x`` restricts each unassigned ``w`` to targets
    within ``h``-walk distance ``dist_g(u, w)`` of ``x`` for both parities,
    because images of walks are walks of the same length.
    """

    def __init__(self, g: Graph, h: Graph, budget: int | None, injective=False, full=False, surjective=False):
        self.g, self.h = g, h
        self.budget = budget
        self.nodes = 0
        self.injective, self.full, self.surjective = injective, full, surjective
        self.gdist = [_search(g, s)[0] for s in g.vertices()]
        self.within = [self._within_masks(x) for x in h.vertices()]
        self.rank = {v: i for i, v in enumerate(_search_order(g))}

    def _within_masks(self, x: int) -> tuple[list[int], list[int]]:
        dist = _search(self.h, x)[0]
        out = []
        for parity in (0, 1):
            finite = [d for d in dist[parity] if d != INF]
            top = int(max(finite, default=0))
            masks = [0] * (top + 1)
            for y, d in enumerate(dist[parity]):
                if d != INF:
                    masks[int(d)] |= 1 << y
            for i in range(1, top + 1):
                masks[i] |= masks[i - 1]
            out.append(masks)
        return out[0], out[1]

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(self.budget, "homomorphism search")

    def run(self) -> list[int] | None:
        g, h = self.g, self.h
        if g.n == 0:
            return [] if not (self.surjective and h.n) else None
        if h.n == 0 or (self.injective and g.n > h.n) or (self.surjective and g.n < h.n):
            return None
        full_mask = (1 << h.n) - 1
        domains = [full_mask] * g.n
        first = min(g.vertices(), key=self.rank.__getitem__)
        if h.n <= ISO_BOUND:
            domains[first] = sum(1 << orbit[0] for orbit in vertex_orbits(h))
        assignment = [-1] * g.n
        return self._rec(domains, assignment, g.n, 0)

    def _rec(self, domains: list[int], assignment: list[int], left: int, covered: int) -> list[int] | None:
        self.tick()
        if left == 0:
            if self.surjective and covered != (1 << self.h.n) - 1:
                return None
            return list(assignment)
        if self.surjective and self.h.n - covered.bit_count() > left:
            return None
        u = min(
            (v for v in self.g.vertices() if assignment[v] < 0),
            key=lambda v: (domains[v].bit_count(), self.rank[v]),
        )
        for x in bits(domains[u]):
            new = self._propagate(domains, assignment, u, x)
            if new is None:
                continue
            assignment[u] = x
            found = self._rec(new, assignment, left - 1, covered | (1 << x))
            if found is not None:
                return found
            assignment[u] = -1
        return None

    def _propagate(self, domains: list[int], assignment: list[int], u: int, x: int) -> list[int] | None:
        even_w, odd_w = self.within[x]
        du_even, du_odd = self.gdist[u]
        non_nbr = ~self.h.adj[x]
        new = list(domains)
        for w in self.g.vertices():
            if assignment[w] >= 0 or w == u:
                continue
            d = new[w]
            e, o = du_even[w], du_odd[w]
            if e != INF:
                d &= even_w[min(int(e), len(even_w) - 1)]
            if o != INF:
                d &= odd_w[min(int(o), len(odd_w) - 1)]
            if self.injective:
                d &= ~(1 << x)
            if self.full and not self.g.has_edge(u, w):
                d &= non_nbr
            if not d:
                return None
            new[w] = d
        return new


def find_hom(g: Graph, h: Graph, budget: int | None = None, target_id: str = "") -> HomCertificate | None:
    """A homomorphism ``g -> h`` or ``None`` (exact unless the budget runs out)."""
    found = _HomSearch(g, h, budget).run()
    return None if found is None else HomCertificate(tuple(found), h, target_id)


def find_subgraph(g: Graph, h: Graph, budget: int | None = None) -> list[int] | None:
    """Injective homomorphism ``h -> g``, i.e. a (not necessarily induced) copy of ``h`` in ``g``."""
    return _HomSearch(h, g, budget, injective=True).run()


def is_blowup_of(g: Graph, h: Graph, budget: int | None = None) -> BlowupDecomposition | None:
    """Decomposition of ``g`` as a blow-up of ``h``, or ``None``."""
    found = _HomSearch(g, h, budget, full=True, surjective=True).run()
    if found is None:
        return None
    classes = tuple(tuple(v for v in g.vertices() if found[v] == i) for i in h.vertices())
    decomposition = BlowupDecomposition(classes, h)
    assert decomposition.validate(g)
    return decomposition


def chromatic_number_le(g: Graph, c: int) -> bool:
    if c < 1:
        raise ValueError("the number of colours must be at least 1")
    return find_hom(g, gen_complete(c)) is not None


# ---------------------------------------------------------------------------
# constructive path


@dataclass(frozen=True)
class ConstructiveResult:
    certificate: HomCertificate
    decomposition: BlowupDecomposition | None
    saturated: Graph


def check_hypotheses(g: Graph, k: int) -> None:
    if k < 2:
        raise HypothesisViolated(f"k must be at least 2, got {k}", "k>=2")
    og = odd_girth(g)
    if og < 2 * k + 1:
        raise HypothesisViolated(f"odd girth {og} < 2k+1 = {2 * k + 1}", "odd_girth")
    delta = g.min_degree()
    if not 4 * k * delta > 3 * g.n:
        raise HypothesisViolated(
            f"minimum degree {delta} is not > 3n/4k = {3 * g.n}/{4 * k} (4k*delta = {4 * k * delta}, 3n = {3 * g.n})",
            "min_degree",
        )


def constructive_c_hom(g: Graph, k: int, order: SaturationOrder = LEX) -> ConstructiveResult:
    """Homomorphism ``g -> C_{2k+1}`` built from the blow-up structure of a saturation.

    Bipartite graphs map their colour classes to cycle vertices 0 and 1 and
    carry no decomposition.  Otherwise the saturated graph is decomposed as a
    blow-up of ``C_{2k+1}``, and that decomposition is returned.
    """
    check_hypotheses(g, k)
    size = 2 * k + 1
    cycle = gen_cycle(size)
    target_id = f"C{size}"
    colouring = two_colouring(g)
    if colouring is not None:
        cert = HomCertificate(tuple(colouring), cycle, target_id)
        if not cert.validate(g):
            raise InternalContradiction("2-colouring failed to validate")
        return ConstructiveResult(cert, None, g)

    sat = saturate(g, k, order)
    seed = shortest_odd_cycle(sat)
    if seed is None or seed.length != size:
        raise InternalContradiction(
            f"saturated graph should have a shortest odd cycle of length {size}, found {seed and seed.length}"
        )
    cls = [-1] * g.n
    members = [0] * size
    for i, v in enumerate(seed.vertices):
        cls[v] = i
        members[i] |= 1 << v

    changed = True
    while changed:
        changed = False
        for x in g.vertices():
            if cls[x] >= 0:
                continue
            touched = frozenset(i for i in range(size) if sat.adj[x] & members[i])
            if not touched:
                continue
            i = _middle_class(touched, size)
            if i is None:
                raise InternalContradiction(f"vertex {x} has neighbours in classes {sorted(touched)}")
            cls[x] = i
            members[i] |= 1 << x
            changed = True
    unplaced = [v for v in g.vertices() if cls[v] < 0]
    if unplaced:
        raise InternalContradiction(f"vertices {unplaced} have no neighbour in the blow-up")

    decomposition = BlowupDecomposition(tuple(tuple(bits(m)) for m in members), cycle)
    if not decomposition.validate(sat):
        raise InternalContradiction("absorbed partition is not a blow-up of the saturated graph")
    cert = HomCertificate(tuple(cls), cycle, target_id)
    if not cert.validate(g):
        raise InternalContradiction("class map is not a homomorphism of the input")
    return ConstructiveResult(cert, decomposition, sat)


def _middle_class(touched: frozenset[int], size: int) -> int | None:
    """The class ``i`` when the touched classes are exactly ``{i-1, i+1}``."""
    if len(touched) != 2:
        return None
    a, b = sorted(touched)
    if (a + 2) % size == b:
        return (a + 1) % size
    if (b + 2) % size == a:
        return (b + 1) % size
    return None


def independent_set_from_hom(g: Graph, cert: HomCertificate, k: int) -> list[int]:
    """Independent set of size >= ceil(kn/(2k+1)) pulled back from ``C_{2k+1}``.

    Rotations of ``{0, 2, ..., 2k-2}`` cover every cycle vertex exactly ``k``
    times, so the largest preimage has at least the average size.
    """
    size = 2 * k + 1
    cycle = gen_cycle(size)
    try:
        ok = cert.target.n == size and verify_hom(g, cycle, cert.map)
    except IndexOutOfRange:
        ok = False
    if not ok:
        raise InvalidCertificate(f"certificate is not a homomorphism into C_{size}")
    counts = [0] * size
    for x in cert.map:
        counts[x] += 1
    base = range(0, 2 * k - 1, 2)
    best = max(range(size), key=lambda r: (sum(counts[(s + r) % size] for s in base), -r))
    chosen = {(s + best) % size for s in base}
    result = [v for v in g.vertices() if cert.map[v] in chosen]
    assert len(result) >= -(-k * g.n // size)
    return result
