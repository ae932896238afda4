"""Colorings: verification, Kempe exchanges, the layered 4-coloring, the
recursive 3-coloring with its recombination steps, and the brute-force
chromatic oracle."""

import pytest

from pentagraph import (
    Coloring,
    ContractViolation,
    InvariantViolation,
    NoDecompositionFound,
    P3Cutset,
    PETERSEN_COLORING,
    SearchBudget,
    SearchBudgetExceeded,
    bfs_layers,
    bit_list,
    chromatic_number_bruteforce,
    combine_p3,
    components,
    find_p3_cutset,
    four_color,
    iter_bits,
    kempe_component,
    kempe_swap,
    make_graph,
    mask_of,
    normalize_on_star,
    three_color,
    verify_coloring,
    verify_parity_star_cutset,
)
from pentagraph.coloring import _merge_star
from pentagraph.fixtures import cycle, fixture, petersen

from conftest import make_rng, p3_gadget, star_gadget
from oracles import o_chromatic
from test_decomposition import glue_petersens_at_vertex, glue_petersens_on_path
from test_graph import rand_graph


def test_verify_coloring_basics():
    G = cycle(5)
    assert verify_coloring(G, Coloring(3, (1, 2, 1, 2, 3)))
    assert not verify_coloring(G, Coloring(3, (1, 1, 2, 3, 2)))
    assert verify_coloring(make_graph(0, []), Coloring(3, ()))
    assert Coloring(3, (1, 2, 1, 2, 3)).used() == {1, 2, 3}
    with pytest.raises(ContractViolation):
        verify_coloring(G, Coloring(3, (1, 2, 1)))
    with pytest.raises(ContractViolation):
        verify_coloring(G, Coloring(3, (1, 2, 1, 2, 4)))
    with pytest.raises(ContractViolation):
        verify_coloring(G, Coloring(3, (0, 2, 1, 2, 3)))


def test_kempe_component_path():
    G = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    c = Coloring(3, (1, 2, 1, 2))
    comp = kempe_component(G, c, (1, 2), 0)
    assert comp.vertices == mask_of(range(4))
    # The color pair is stored sorted regardless of argument order.
    assert kempe_component(G, c, (2, 1), 0).colors == (1, 2)
    # Color 3 is unused, so the {1,3}-component of 0 is 0 alone.
    assert kempe_component(G, c, (1, 3), 0).vertices == 1
    with pytest.raises(ContractViolation):
        kempe_component(G, c, (2, 2), 0)
    with pytest.raises(ContractViolation):
        kempe_component(G, Coloring(3, (1, 2, 3, 2)), (1, 2), 2)


def test_kempe_swap_pentagon():
    G = cycle(5)
    c = Coloring(3, (1, 2, 1, 2, 3))
    # Vertices 0..3 form one {1,2}-component; 4 is left alone.
    assert kempe_swap(G, c, (1, 2), 0).colors == (2, 1, 2, 1, 3)
    assert kempe_swap(G, c, (1, 2), 3) == kempe_swap(G, c, (1, 2), 0)
    # {1,3} splits differently: only the edge 4-0 joins the pair.
    assert kempe_swap(G, c, (1, 3), 4).colors == (3, 2, 1, 2, 1)
    # Swapping twice at the same vertex is the identity.
    assert kempe_swap(G, kempe_swap(G, c, (1, 2), 0), (1, 2), 0) == c


def test_kempe_swap_random_properness_and_involution(random_pentagraphs_20):
    rng = make_rng("kempe")
    for G in random_pentagraphs_20[:60]:
        if G.n == 0:
            continue
        c = four_color(G)
        for _ in range(4):
            v = rng.randrange(G.n)
            other = rng.choice([x for x in (1, 2, 3, 4) if x != c.colors[v]])
            pair = (c.colors[v], other)
            swapped = kempe_swap(G, c, pair, v)
            assert verify_coloring(G, swapped)
            # Same component before and after, and the swap undoes itself.
            assert (
                kempe_component(G, swapped, pair, v).vertices
                == kempe_component(G, c, pair, v).vertices
            )
            assert kempe_swap(G, swapped, pair, v) == c
            c = swapped


def test_four_color_pentagon_frozen():
    # Layers from 0 are {0}, {1,4}, {2,3}: palette {1,2} on even layers,
    # {3,4} on odd ones, breadth-first sources landing on side 0.
    assert four_color(cycle(5)).colors == (1, 3, 1, 2, 3)
    assert four_color(make_graph(3, [])).colors == (1, 1, 1)
    assert four_color(make_graph(0, [])) == Coloring(4, ())


def test_four_color_members_layerwise(random_pentagraphs_20):
    for G in random_pentagraphs_20[:80]:
        col = four_color(G)
        assert col.k == 4
        assert verify_coloring(G, col)
        for comp in components(G):
            layering = bfs_layers(G, bit_list(comp)[0])
            for idx, layer in enumerate(layering.layers):
                allowed = (1, 2) if idx % 2 == 0 else (3, 4)
                assert all(col.colors[v] in allowed for v in iter_bits(layer))


def test_four_color_rejects_odd_layer():
    with pytest.raises(InvariantViolation) as err:
        four_color(make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))
    idx, cyc = err.value.witness
    assert idx == 1 and set(cyc) == {1, 2, 3}
    # Disjoint union: the witness must come back in the host labeling.
    union = make_graph(
        9,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
        + [(u, v) for u in range(5, 9) for v in range(u + 1, 9)],
    )
    with pytest.raises(InvariantViolation) as err:
        four_color(union)
    idx, cyc = err.value.witness
    assert idx == 1 and set(cyc) == {6, 7, 8}


def test_petersen_coloring_constant():
    assert len(PETERSEN_COLORING) == 10
    assert set(PETERSEN_COLORING) == {1, 2, 3}
    assert verify_coloring(petersen(), Coloring(3, PETERSEN_COLORING))


def test_combine_p3_agreeing_sides():
    G = p3_gadget()
    cut = find_p3_cutset(G)
    assert cut == P3Cutset((0, 1, 2), (mask_of((3, 4, 6)), mask_of((5,))))
    # Side subgraphs list old vertices in ascending order: the first is
    # G[{0,1,2,3,4,6}], the second G[{0,1,2,5}].
    col1 = Coloring(3, (1, 2, 1, 2, 3, 1))
    col2 = Coloring(3, (1, 2, 1, 1))
    merged = combine_p3(G, cut, [col1, col2])
    assert merged == Coloring(3, (1, 2, 1, 2, 3, 1, 1))
    assert verify_coloring(G, merged)
    # A relabeled palette on one side anchors back to the same merge.
    col1_swapped = Coloring(3, (2, 1, 2, 1, 3, 2))
    assert combine_p3(G, cut, [col1_swapped, col2]) == merged


def test_combine_p3_stuck_side_sets_the_target():
    G = p3_gadget()
    cut = find_p3_cutset(G)
    # First side: 0 and 2 share a {1,3}-component (0-4-3-2 alternates), so
    # its value 3 at the path's end is forced and the free side must flip.
    col1 = Coloring(3, (1, 2, 3, 1, 3, 2))
    col2 = Coloring(3, (1, 2, 1, 1))
    merged = combine_p3(G, cut, [col1, col2])
    assert merged == Coloring(3, (1, 2, 3, 1, 3, 1, 2))
    assert verify_coloring(G, merged)


def test_combine_p3_contract_errors():
    G = p3_gadget()
    cut = find_p3_cutset(G)
    col1 = Coloring(3, (1, 2, 1, 2, 3, 1))
    col2 = Coloring(3, (1, 2, 1, 1))
    with pytest.raises(ContractViolation):
        combine_p3(G, cut, [col1])
    with pytest.raises(ContractViolation):
        combine_p3(G, cut, [col1, Coloring(4, (1, 2, 1, 4))])
    with pytest.raises(ContractViolation):
        combine_p3(G, cut, [col1, Coloring(3, (1, 1, 1, 1))])
    bad_cut = P3Cutset((0, 1, 2), (mask_of((5,)), mask_of((3, 4, 6))))
    with pytest.raises(InvariantViolation):
        combine_p3(G, bad_cut, [col2, col1])


def test_combine_p3_detects_parity_clash():
    # Two internally disjoint 0-2 connectors of different parity close an
    # induced 7-cycle (0-3-4-2-7-6-5), so the input sits outside the class
    # and both sides can be stuck on different values at the path's end.
    G = make_graph(
        8,
        [(0, 1), (1, 2), (0, 3), (3, 4), (4, 2), (0, 5), (5, 6), (6, 7), (7, 2)],
    )
    cut = P3Cutset((0, 1, 2), (mask_of((3, 4)), mask_of((5, 6, 7))))
    cut.validate(G)
    col_a = Coloring(3, (1, 2, 3, 3, 1))
    col_b = Coloring(3, (1, 2, 1, 3, 1, 3))
    with pytest.raises(InvariantViolation) as err:
        combine_p3(G, cut, [col_a, col_b])
    assert err.value.witness == ((0, 3, 4, 2), (0, 5, 6, 7, 2))


def test_normalize_on_star_single_swap():
    G = star_gadget()
    start = Coloring(3, (1, 2, 3, 1, 2, 1, 1, 2, 1, 3))
    assert verify_coloring(G, start)
    fixed = normalize_on_star(G, start, 0, mask_of((1, 2)))
    assert fixed == Coloring(3, (1, 2, 2, 1, 2, 1, 1, 2, 1, 3))
    assert verify_coloring(G, fixed)
    # Already-normalized input passes through unchanged.
    assert normalize_on_star(G, fixed, 0, mask_of((1, 2))) == fixed


def test_normalize_on_star_permutes_palette_first():
    G = star_gadget()
    # Same coloring as above with the palette rotated 1->2->3->1; the
    # normalizer must first send the center back to color 1.
    start = Coloring(3, (2, 3, 1, 2, 3, 2, 2, 3, 2, 1))
    fixed = normalize_on_star(G, start, 0, mask_of((1, 2)))
    assert fixed == Coloring(3, (1, 2, 2, 1, 3, 1, 1, 3, 1, 2))
    assert fixed.colors[0] == 1 and fixed.colors[1] == fixed.colors[2] == 2
    assert verify_coloring(G, fixed)


def test_normalize_on_star_mixed_leaves_raise():
    # On the pentagon, {0} with leaves {1,4} is not a cutset; the exchange
    # component mixes both leaf colors and the odd leaf-to-leaf path comes
    # back as the witness.
    G = cycle(5)
    c = Coloring(3, (1, 2, 3, 2, 3))
    with pytest.raises(InvariantViolation) as err:
        normalize_on_star(G, c, 0, mask_of((1, 4)))
    assert err.value.witness == (1, 2, 3, 4)


def test_normalize_on_star_contract_errors():
    G = star_gadget()
    good = Coloring(3, (1, 2, 3, 1, 2, 1, 1, 2, 1, 3))
    with pytest.raises(ContractViolation):
        normalize_on_star(G, good, 0, mask_of((1, 3)))
    with pytest.raises(ContractViolation):
        normalize_on_star(G, four_color(G), 0, mask_of((1, 2)))
    with pytest.raises(ContractViolation):
        normalize_on_star(G, Coloring(3, (1,) * 10), 0, mask_of((1, 2)))


def test_merge_star_colors_the_gadget():
    G = star_gadget()
    cert = verify_parity_star_cutset(G, 0, mask_of((1, 2)))
    assert cert is not None and cert.strong
    col = _merge_star(G, cert, SearchBudget.fresh(), G.n + 2)
    assert col.k == 3
    assert verify_coloring(G, col)
    assert col.colors[0] == 1 and col.colors[1] == col.colors[2] == 2


def test_three_color_fixtures():
    for name in ("c5", "p0", "p1", "p2", "petersen"):
        G = fixture(name)
        col = three_color(G)
        assert col.k == 3
        assert verify_coloring(G, col)
    assert set(three_color(petersen()).colors) == {1, 2, 3}
    # Deterministic output.
    assert three_color(fixture("p0")) == three_color(fixture("p0"))


def test_three_color_trivial_and_off_class():
    assert three_color(make_graph(0, [])) == Coloring(3, ())
    assert three_color(make_graph(1, [])).colors == (1,)
    # The 7-cycle is outside the class but unwinds by degree-2 deletions,
    # so the colorer still succeeds; it is not a recognizer.
    G = cycle(7)
    assert verify_coloring(G, three_color(G))
    with pytest.raises(NoDecompositionFound):
        three_color(make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))


def test_three_color_budget():
    with pytest.raises(SearchBudgetExceeded):
        three_color(petersen(), SearchBudget(1))


def test_three_color_small_members(small_pentagraphs):
    for G in small_pentagraphs[::97]:
        col = three_color(G)
        assert col.k == 3
        assert verify_coloring(G, col)


def test_three_color_random_members(random_pentagraphs_20, random_pentagraphs_40):
    for G in random_pentagraphs_20:
        assert verify_coloring(G, three_color(G, SearchBudget(10**9)))
    for G in random_pentagraphs_40[::10]:
        assert verify_coloring(G, three_color(G, SearchBudget(10**9)))


def test_three_color_through_clique_cuts():
    # Both glued graphs are members whose recursion passes a clique cutset
    # and bottoms out in two ten-vertex base cases.
    for G in (glue_petersens_at_vertex(), make_glued_on_edge()):
        col = three_color(G, SearchBudget(10**9))
        assert col.k == 3
        assert verify_coloring(G, col)


def make_glued_on_edge():
    """Two Petersen copies sharing the edge 0-1; the clique cut (0, 1)."""
    edges = list(petersen().edges())
    relabel = {0: 0, 1: 1}
    relabel.update({k: 8 + k for k in range(2, 10)})
    edges += [(relabel[u], relabel[v]) for u, v in petersen().edges()]
    return make_graph(18, edges)


def test_three_color_on_path_glued_copies():
    # Off-class input (it holds an induced 7-cycle) whose decomposition is
    # the cut path: the combiner either returns a verified coloring or
    # certifies the clash; both are in contract off the class.
    G = glue_petersens_on_path()
    try:
        col = three_color(G, SearchBudget(10**9))
    except InvariantViolation as err:
        assert err.witness
    else:
        assert verify_coloring(G, col)


def test_chromatic_bruteforce_cases():
    assert chromatic_number_bruteforce(make_graph(0, []), 3) == 0
    assert chromatic_number_bruteforce(cycle(5), 0) is None
    assert chromatic_number_bruteforce(make_graph(5, []), 3) == 1
    assert chromatic_number_bruteforce(make_graph(4, [(0, 1), (0, 2), (0, 3)]), 3) == 2
    assert chromatic_number_bruteforce(cycle(6), 4) == 2
    assert chromatic_number_bruteforce(cycle(5), 4) == 3
    assert chromatic_number_bruteforce(petersen(), 4) == 3
    k4 = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert chromatic_number_bruteforce(k4, 3) is None
    assert chromatic_number_bruteforce(k4, 4) == 4


def test_chromatic_bruteforce_matches_oracle():
    rng = make_rng("chromatic")
    for _ in range(60):
        G = rand_graph(rng, rng.randrange(7), rng.uniform(0.1, 0.9))
        assert chromatic_number_bruteforce(G, 4) == o_chromatic(G, 4)
