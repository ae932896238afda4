import pytest

from pentagraph import (
    ContractViolation,
    distance,
    induced_subgraph,
    is_isomorphic,
    is_linked,
    make_graph,
    mask_of,
)
from pentagraph.fixtures import (
    FIXTURE_NAMES,
    cycle,
    fixture,
    petersen,
    petersen_minus_edge,
    petersen_minus_two,
    petersen_minus_vertex,
)

from oracles import o_is_linked


def test_cycle():
    assert cycle(5).edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    with pytest.raises(ContractViolation):
        cycle(2)


def test_degrees_and_sizes():
    P = petersen()
    assert P.n == 10 and P.edge_count() == 15
    assert all(P.degree(v) == 3 for v in range(10))

    p0 = petersen_minus_edge()
    assert p0.n == 10 and p0.edge_count() == 14
    assert sorted(p0.degree(v) for v in range(10)) == [2, 2] + [3] * 8

    p1 = petersen_minus_vertex()
    assert p1.n == 9 and p1.edge_count() == 12
    assert sorted(p1.degree(v) for v in range(9)) == [2, 2, 2] + [3] * 6

    p2 = petersen_minus_two()
    assert p2.n == 8 and p2.edge_count() == 10
    assert sorted(p2.degree(v) for v in range(8)) == [2, 2, 2, 2, 3, 3, 3, 3]


def test_deletions_match_petersen():
    P = petersen()
    minus_edge = make_graph(10, [e for e in P.edges() if e != (0, 1)])
    assert is_isomorphic(fixture("p0"), minus_edge)

    minus_vertex, _ = induced_subgraph(P, P.full_mask() & ~(1 << 9))
    assert is_isomorphic(fixture("p1"), minus_vertex)

    # 0 and 5 are adjacent in the Petersen graph.
    minus_two, _ = induced_subgraph(P, P.full_mask() & ~mask_of([0, 5]))
    assert is_isomorphic(fixture("p2"), minus_two)


def test_p0_degree_two_vertices_far_apart():
    p0 = petersen_minus_edge()
    low = [v for v in range(10) if p0.degree(v) == 2]
    assert low == [8, 9]
    assert distance(p0, 8, 9) == 4


def test_p1_low_degree_vertices_pairwise_linked():
    p1 = petersen_minus_vertex()
    low = [v for v in range(9) if p1.degree(v) == 2]
    assert low == [6, 7, 8]
    for i, s in enumerate(low):
        for t in low[i + 1 :]:
            assert not p1.has_edge(s, t)
            assert is_linked(p1, s, t)
            assert o_is_linked(p1, s, t)


def test_p2_linked_and_unlinked_pairs():
    p2 = petersen_minus_two()
    for s, t in [(0, 4), (2, 6)]:
        assert is_linked(p2, s, t)
        assert o_is_linked(p2, s, t)
    for s, t in [(0, 2), (2, 4), (4, 6), (0, 6)]:
        assert not is_linked(p2, s, t)
        assert not o_is_linked(p2, s, t)


def test_fixture_lookup():
    assert fixture("petersen") == petersen()
    assert set(FIXTURE_NAMES) == {"c5", "c7", "p0", "p1", "p2", "petersen"}
    with pytest.raises(ContractViolation):
        fixture("heawood")
