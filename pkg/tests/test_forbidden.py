import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddgirth.campaigns import sample_lemma_graph
from oddgirth.errors import SearchBudgetExceeded
from oddgirth.forbidden import (
    PhiPrimeWitness,
    PhiWitness,
    TetraWitness,
    find_induced_phi,
    find_phi_prime,
    find_tetrahedron,
    spoke_length_tuples,
)
from oddgirth.generators import gen_complete, gen_cycle, gen_mobius_ladder
from oddgirth.graph import build_graph
from oddgirth.parity import odd_girth
from oddgirth.rng import XorShift64Star
from oddgirth.saturation import in_class_G, saturate

from oracles import has_induced_phi_naive, has_phi_prime_naive, has_tetrahedron_naive, random_graph


# -- Phi ---------------------------------------------------------------------


def test_phi_finds_itself(phi):
    w = find_induced_phi(phi)
    assert w is not None and w.validate(phi)
    assert w.to_record()["kind"] == "phi"


def test_phi_absent_examples():
    assert find_induced_phi(gen_cycle(6)) is None
    both = gen_cycle(6).with_edges([(0, 3), (1, 4)])
    assert find_induced_phi(both) is None
    assert find_induced_phi(saturate(gen_cycle(7), 2)) is None


def test_phi_witness_rejects_non_induced(phi):
    assert PhiWitness((0, 1, 2, 3, 4, 5)).validate(phi)
    assert not PhiWitness((0, 1, 2, 3, 4, 5)).validate(phi.with_edges([(0, 3)]))
    assert not PhiWitness((0, 1, 2, 3, 4, 4)).validate(phi)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(6, 9), st.floats(0.2, 0.7))
def test_phi_matches_naive(seed, n, p):
    g = random_graph(random.Random(seed), n, p)
    w = find_induced_phi(g)
    assert (w is not None) == has_induced_phi_naive(g)
    if w is not None:
        assert w.validate(g)


# -- Phi prime ---------------------------------------------------------------


def test_phi_prime_examples():
    m8 = gen_mobius_ladder(8)
    w = find_phi_prime(m8, 2)
    assert w is not None and w.validate(m8, 2)
    assert find_phi_prime(gen_cycle(9), 2) is None


def test_phi_prime_k44_golden(k44):
    # every long diagonal of an 8-cycle in K_{4,4} joins two vertices on the same side
    assert find_phi_prime(k44, 2) is None


def test_phi_prime_witness_needs_consecutive_diagonals(m8):
    cycle = tuple(range(8))
    assert PhiPrimeWitness(cycle, ((0, 4), (1, 5), (2, 6))).validate(m8, 2)
    # diagonals are read cyclically: {3, 7} starts at 7, so 7, 0, 1 are consecutive
    assert PhiPrimeWitness(cycle, ((0, 4), (1, 5), (3, 7))).validate(m8, 2)
    assert not PhiPrimeWitness(cycle, ((0, 4), (1, 5), (1, 5))).validate(m8, 2)
    m12 = gen_mobius_ladder(12)
    cycle = tuple(range(12))
    assert PhiPrimeWitness(cycle, ((0, 6), (1, 7), (2, 8))).validate(m12, 3)
    assert not PhiPrimeWitness(cycle, ((0, 6), (1, 7), (3, 9))).validate(m12, 3)


def test_phi_prime_budget():
    with pytest.raises(SearchBudgetExceeded):
        find_phi_prime(gen_mobius_ladder(12), 3, budget=1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(6, 10), st.floats(0.25, 0.6))
def test_phi_prime_matches_naive(seed, n, p):
    g = random_graph(random.Random(seed), n, p)
    w = find_phi_prime(g, 2, budget=None)
    assert (w is not None) == has_phi_prime_naive(g, 2)
    if w is not None:
        assert w.validate(g, 2)


# -- tetrahedra --------------------------------------------------------------


def test_tetra_fixture(tetra8):
    w = find_tetrahedron(tetra8, 2)
    assert w is not None and w.validate(tetra8, 2)
    assert sorted(w.spoke_lengths) == [1, 2, 2]
    assert sum(w.arc_lengths) == 5
    assert len(w.vertex_set()) == 8
    record = w.to_record()
    assert record["kind"] == "tetrahedron"
    assert set(record["vertices"]) == w.vertex_set()


def test_tetra_witness_identities(tetra8):
    w = TetraWitness(0, (1, 3, 5), ((0, 1), (0, 2, 3), (0, 4, 5)), ((1, 6, 3), (3, 5), (5, 7, 1)))
    assert w.validate(tetra8, 2)
    p, q, r = w.spoke_lengths
    for i, spoke in enumerate((p, q, r)):
        assert len(w.oplus_cycle(i)) == 4 * 2 + 2 - 2 * spoke
    for i, j in ((0, 1), (1, 2), (2, 0)):
        cyc = w.center_cycle(i, j)
        assert len(cyc) == 5 and len(set(cyc)) == 5
        assert all(tetra8.has_edge(cyc[t], cyc[(t + 1) % 5]) for t in range(5))
    assert not w.validate(build_graph(8, []), 2)
    assert not w.validate(tetra8, 3)


def test_tetra_absent_examples():
    assert find_tetrahedron(gen_cycle(9), 2) is None


def test_tetra_budget():
    with pytest.raises(SearchBudgetExceeded):
        find_tetrahedron(gen_complete(10), 3, budget=5)


def test_spoke_tuples():
    tuples = spoke_length_tuples(2, 5)
    assert (1, 2, 2) in tuples and (1, 1, 2) not in tuples
    assert all(sum(t) <= 5 for t in tuples)
    assert [sum(t) for t in tuples] == sorted(sum(t) for t in tuples)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32), st.integers(4, 8), st.floats(0.2, 0.6), st.sampled_from([2, 3]))
def test_tetra_matches_naive(seed, n, p, k):
    g = random_graph(random.Random(seed), n, p)
    w = find_tetrahedron(g, k, budget=None)
    assert (w is not None) == has_tetrahedron_naive(g, k)
    if w is not None:
        assert w.validate(g, k)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32), st.integers(5, 9), st.floats(0.2, 0.6))
def test_short_outer_pruning_is_safe(seed, n, p):
    """With odd girth >= 2k+1 the pruned and unpruned searches agree."""
    g = saturate(build_graph(n, []), 2) if p > 0.55 else random_graph(random.Random(seed), n, p)
    if odd_girth(g) < 5:
        return
    pruned = find_tetrahedron(g, 2, budget=None, short_outer_pruning=True)
    full = find_tetrahedron(g, 2, budget=None, short_outer_pruning=False)
    assert (pruned is None) == (full is None)


def test_class_members_avoid_both_configurations():
    rng = XorShift64Star(3)
    members = 0
    for _ in range(40):
        g = sample_lemma_graph(rng, 2, (5, 12))
        if not in_class_G(g, 2):
            continue
        members += 1
        assert find_induced_phi(g) is None
        assert find_tetrahedron(g, 2) is None
    assert members > 0
