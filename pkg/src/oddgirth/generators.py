"""Generators for the graph families used as witnesses and test fixtures.

Labels are fixed: cycle-based families put the underlying cycle on
``0, 1, ..., r-1`` in order; blow-ups number class ``0`` first, then class
``1`` and so on.  Serialized fixtures are therefore stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import OddParam, ParamTooSmall, SizeMismatch, ZeroClass
from .graph import Graph, build_graph

GENERATOR_KINDS = ("cycle", "complete", "mobius_ladder", "f_family", "blowup", "grotzsch")


@dataclass(frozen=True)
class GeneratorSpec:
    """A named generator call, e.g. ``GeneratorSpec("f_family", (4, 2))``."""

    kind: str
    params: tuple = field(default_factory=tuple)
    base: Graph | None = None

    def build(self) -> Graph:
        if self.kind == "cycle":
            return gen_cycle(*self.params)
        if self.kind == "complete":
            return gen_complete(*self.params)
        if self.kind == "mobius_ladder":
            return gen_mobius_ladder(*self.params)
        if self.kind == "f_family":
            return gen_f_family(*self.params)
        if self.kind == "grotzsch":
            return gen_grotzsch()
        if self.kind == "blowup":
            if self.base is None:
                raise ValueError("blowup needs a base graph")
            return gen_blowup(self.base, self.params)[0]
        raise ValueError(f"unknown generator kind {self.kind!r}; expected one of {GENERATOR_KINDS}")


def _circulant(r: int, distances: Sequence[int]) -> Graph:
    edges = []
    for i in range(r):
        for d in distances:
            edges.append((i, (i + d) % r))
    return build_graph(r, edges)


def gen_cycle(r: int) -> Graph:
    if r < 3:
        raise ParamTooSmall(f"a cycle needs at least 3 vertices, got {r}")
    return _circulant(r, [1])


def gen_complete(r: int) -> Graph:
    if r < 1:
        raise ParamTooSmall(f"K_r needs r >= 1, got {r}")
    return build_graph(r, [(u, v) for u in range(r) for v in range(u + 1, r)])


def gen_mobius_ladder(r: int) -> Graph:
    """Cycle ``0..r-1`` plus the diagonals ``{i, i + r/2}``."""
    if r % 2:
        raise OddParam(f"the Mobius ladder needs an even cycle length, got {r}")
    if r < 6:
        raise ParamTooSmall(f"the Mobius ladder needs r >= 6, got {r}")
    return _circulant(r, [1, r // 2])


def f_family_order(ell: int, k: int) -> int:
    return (2 * k - 1) * (ell - 1) + 2


def gen_f_family(ell: int, k: int) -> Graph:
    """The ``ell``-regular circulant with odd girth ``2k+1``.

    Built from a cycle of length ``(2k-1)(ell-1)+2`` by joining vertices at
    cycle distance ``j(2k-1)+1`` for ``j = 1..floor((ell-1)/2)``.  ``ell=2``
    gives ``C_{2k+1}`` and ``ell=3`` the Mobius ladder ``M_{4k}``.  ``k=2`` is
    accepted as well.
    """
    if ell < 2:
        raise ParamTooSmall(f"ell must be at least 2, got {ell}")
    if k < 2:
        raise ParamTooSmall(f"k must be at least 2, got {k}")
    r = f_family_order(ell, k)
    chords = [j * (2 * k - 1) + 1 for j in range(1, (ell - 1) // 2 + 1)]
    return _circulant(r, [1, *chords])


def gen_blowup(h: Graph, sizes: Sequence[int]) -> tuple[Graph, list[int]]:
    """Replace vertex ``u`` of ``h`` by ``sizes[u]`` independent copies.

    Returns the blow-up and its class map (vertex -> vertex of ``h``), which is
    a surjective homomorphism onto ``h``.
    """
    if len(sizes) != h.n:
        raise SizeMismatch(f"expected {h.n} class sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ZeroClass("every class of a blow-up must be non-empty")
    class_map = [u for u, s in enumerate(sizes) for _ in range(s)]
    members: list[list[int]] = [[] for _ in range(h.n)]
    for x, u in enumerate(class_map):
        members[u].append(x)
    edges = [(x, y) for u, v in h.edges() for x in members[u] for y in members[v]]
    return build_graph(len(class_map), edges), class_map


def gen_grotzsch() -> Graph:
    """Mycielskian of ``C_5``: cycle ``0..4``, shadows ``5..9``, hub ``10``."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges.append((5 + i, (i + 1) % 5))
        edges.append((5 + i, (i - 1) % 5))
        edges.append((5 + i, 10))
    return build_graph(11, edges)
