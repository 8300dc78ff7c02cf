"""Canonical forms for small graphs by individualization and refinement.

Adequate for the desk-scale graphs handled here (tens of vertices at most).
Branches that differ only by swapping twin vertices are skipped, which keeps
complete, empty and complete multipartite graphs cheap.
"""

from __future__ import annotations

from typing import Sequence

from .errors import TooLarge
from .graph import Graph

ISO_BOUND = 16

CanonicalForm = tuple[int, tuple[int, ...]]


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; split cells keep their position in the order."""
    while True:
        masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            masks.append(mask)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((g.adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[s] for s in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _encode(g: Graph, order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        a = g.adj[v]
        while a:
            low = a & -a
            row |= 1 << pos[low.bit_length() - 1]
            a ^= low
        rows.append(row)
    return tuple(rows)


def _twins(g: Graph, u: int, v: int) -> bool:
    return g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)


def canonical_form(g: Graph, cells: Sequence[Sequence[int]] | None = None) -> CanonicalForm:
    """Isomorphism-invariant encoding of ``g``.

    ``cells`` is an optional ordered colouring that isomorphisms must respect;
    by default all vertices share one colour.
    """
    if g.n == 0:
        return (0, ())
    start = [list(c) for c in cells] if cells is not None else [list(range(g.n))]
    best: tuple[int, ...] | None = None

    def search(part: list[list[int]]) -> None:
        nonlocal best
        part = _refine(g, part)
        for i, cell in enumerate(part):
            if len(cell) > 1:
                break
        else:
            form = _encode(g, [c[0] for c in part])
            if best is None or form < best:
                best = form
            return
        tried: list[int] = []
        for v in cell:
            if any(_twins(g, v, t) for t in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(part[:i] + [[v], rest] + part[i + 1:])

    search(start)
    assert best is not None
    return (g.n, best)


def _check_bound(g: Graph, bound: int) -> None:
    if g.n > bound:
        raise TooLarge(f"isomorphism testing is limited to n <= {bound}, got n={g.n}")


def is_isomorphic(g: Graph, h: Graph, bound: int = ISO_BOUND) -> bool:
    _check_bound(g, bound)
    _check_bound(h, bound)
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def vertex_orbits(g: Graph) -> list[list[int]]:
    """Partition of the vertices into automorphism orbits."""
    by_form: dict[CanonicalForm, list[int]] = {}
    for v in g.vertices():
        rest = [w for w in g.vertices() if w != v]
        cells = [[v], rest] if rest else [[v]]
        by_form.setdefault(canonical_form(g, cells), []).append(v)
    return sorted(by_form.values())
