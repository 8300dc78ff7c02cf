import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddgirth.errors import GirthTooSmall, IndexOutOfRange, PreconditionViolated
from oddgirth.generators import gen_complete, gen_cycle, gen_f_family, gen_mobius_ladder
from oddgirth.graph import build_graph
from oddgirth.parity import (
    INF,
    check_odd_girth,
    creates_short_odd_cycle,
    even_distance,
    is_bipartite,
    odd_girth,
    parity_bfs,
    shortest_odd_cycle,
    two_colouring,
)

from oracles import odd_girth_by_cycles, random_graph


def test_parity_distances_on_c5():
    d = parity_bfs(gen_cycle(5), 0)
    assert d.odd[1] == 1 and d.even[1] == 4
    assert d.even[0] == 0 and d.odd[0] == 5


def test_parity_distances_on_c6():
    d = parity_bfs(gen_cycle(6), 0)
    assert d.odd[0] == INF
    assert d.even[2] == 2 and d.odd[2] == INF
    assert d.odd[1] == 1 and d.even[1] == INF


def test_parity_distances_on_k2():
    d = parity_bfs(gen_complete(2), 0)
    assert (d.even[0], d.odd[0], d.odd[1], d.even[1]) == (0, INF, 1, INF)


def test_parity_bfs_source_check():
    with pytest.raises(IndexOutOfRange):
        parity_bfs(gen_cycle(5), 5)


@pytest.mark.parametrize(
    "g, expected",
    [
        (gen_complete(4), 3),
        (gen_mobius_ladder(8), 5),
        (gen_cycle(6), INF),
        (gen_f_family(4, 2), 5),
        (build_graph(0, []), INF),
        (build_graph(3, []), INF),
    ],
)
def test_odd_girth_examples(g, expected):
    assert odd_girth(g) == expected


def test_infinity_sentinel():
    assert INF is math.inf


def test_shortest_odd_cycle_examples():
    w = shortest_odd_cycle(gen_cycle(7))
    assert w.length == 7 and sorted(w.vertices) == list(range(7))
    assert shortest_odd_cycle(gen_cycle(6)) is None
    m8 = gen_mobius_ladder(8)
    w = shortest_odd_cycle(m8)
    assert w.length == 5 and w.validate(m8)


def test_two_colouring():
    colours = two_colouring(gen_cycle(6))
    assert colours is not None
    assert all(colours[u] != colours[v] for u, v in gen_cycle(6).edges())
    assert two_colouring(gen_cycle(5)) is None
    assert is_bipartite(gen_cycle(8)) and not is_bipartite(gen_cycle(9))


def test_creates_short_odd_cycle_examples():
    assert creates_short_odd_cycle(gen_cycle(5), 0, 2, 2)
    assert not creates_short_odd_cycle(gen_cycle(7), 0, 3, 2)
    assert creates_short_odd_cycle(gen_cycle(7), 0, 2, 3)


def test_creates_short_odd_cycle_errors():
    with pytest.raises(IndexOutOfRange):
        creates_short_odd_cycle(gen_cycle(5), 0, 9, 2)
    with pytest.raises(PreconditionViolated):
        creates_short_odd_cycle(gen_cycle(5), 0, 1, 2)
    with pytest.raises(GirthTooSmall):
        creates_short_odd_cycle(build_graph(4, [(0, 1), (1, 2), (0, 2)]), 0, 3, 2)


def test_check_odd_girth():
    check_odd_girth(gen_cycle(5), 2)
    with pytest.raises(GirthTooSmall):
        check_odd_girth(gen_cycle(5), 3)


def test_even_distance():
    assert even_distance(gen_cycle(7), 0, 3) == 4
    assert even_distance(gen_cycle(6), 0, 1) == INF


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 9), st.floats(0.1, 0.7))
def test_odd_girth_matches_cycle_search(seed, n, p):
    g = random_graph(random.Random(seed), n, p)
    og = odd_girth(g)
    assert og == odd_girth_by_cycles(g)
    w = shortest_odd_cycle(g)
    if og == INF:
        assert w is None and is_bipartite(g)
    else:
        assert w.validate(g) and w.length == og


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 9), st.floats(0.1, 0.6))
def test_parity_distances_symmetric(seed, n, p):
    g = random_graph(random.Random(seed), n, p)
    table = [parity_bfs(g, s) for s in range(n)]
    for s in range(n):
        for t in range(n):
            assert table[s].even[t] == table[t].even[s]
            assert table[s].odd[t] == table[t].odd[s]
            if table[s].even[t] != INF:
                assert table[s].even[t] % 2 == 0
            if table[s].odd[t] != INF:
                assert table[s].odd[t] % 2 == 1
