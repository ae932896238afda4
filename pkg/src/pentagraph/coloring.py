"""Certified colorings: the layered 4-coloring, the recursive 3-coloring
with Kempe-exchange recombination, and a brute-force oracle.

Both top-level colorers verify properness before returning. Recombination
steps that would only fail on inputs outside the class raise
InvariantViolation carrying the offending structure instead of returning a
bad coloring.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .decomposition import P3Cutset, decompose
from .errors import ContractViolation, InvariantViolation, NoDecompositionFound
from .graph import (
    Graph,
    bfs_layers,
    bit_list,
    components,
    components_within,
    induced_subgraph,
    is_bipartite,
    iter_bits,
)
from .structure import SearchBudget


@dataclass(frozen=True)
class Coloring:
    """A total color assignment, colors[v] in 1..k."""

    k: int
    colors: tuple[int, ...]

    def used(self) -> set[int]:
        return set(self.colors)


@dataclass(frozen=True)
class KempeComponent:
    """A connected component of the subgraph induced on two color classes."""

    colors: tuple[int, int]
    vertices: int


def verify_coloring(G: Graph, c: Coloring) -> bool:
    """True iff proper; raises on assignments that are not total maps into
    1..k."""
    if len(c.colors) != G.n:
        raise ContractViolation("assignment must cover every vertex exactly once")
    if any(not 1 <= col <= c.k for col in c.colors):
        raise ContractViolation(f"colors must lie in 1..{c.k}")
    return all(c.colors[u] != c.colors[v] for u, v in G.edges())


def kempe_component(G: Graph, c: Coloring, pair: tuple[int, int], v: int) -> KempeComponent:
    """The component of the {a,b}-colored subgraph containing v."""
    a, b = pair
    if a == b:
        raise ContractViolation("the color pair must be two distinct colors")
    if c.colors[v] not in (a, b):
        raise ContractViolation(f"vertex {v} has color {c.colors[v]}, not in {{{a}, {b}}}")
    in_pair = 0
    for u in range(G.n):
        if c.colors[u] in (a, b):
            in_pair |= 1 << u
    comp = 1 << v
    frontier = comp
    while frontier:
        grow = 0
        for u in iter_bits(frontier):
            grow |= G.adj[u] & in_pair & ~comp
        comp |= grow
        frontier = grow
    return KempeComponent((a, b) if a < b else (b, a), comp)


def kempe_swap(G: Graph, c: Coloring, pair: tuple[int, int], v: int) -> Coloring:
    """Exchange the two colors on the component containing v; properness is
    preserved and the operation is an involution."""
    a, b = pair
    comp = kempe_component(G, c, pair, v).vertices
    out = list(c.colors)
    for u in iter_bits(comp):
        out[u] = a if out[u] == b else b
    return Coloring(c.k, tuple(out))


def four_color(G: Graph) -> Coloring:
    """Layered 4-coloring: 2-color each breadth-first layer, palette {1,2}
    on even layers and {3,4} on odd ones.

    Works per component (source = least vertex). A layer inducing a
    non-bipartite subgraph means the input was not in the class; that
    raises InvariantViolation with (layer index, odd cycle) as witness.
    """
    out = [0] * G.n
    for comp in components(G):
        source = bit_list(comp)[0]
        layering = bfs_layers(G, source)
        for idx, layer in enumerate(layering.layers):
            sub, old_ids = induced_subgraph(G, layer)
            check = is_bipartite(sub)
            if not check:
                cyc = tuple(old_ids[v] for v in check.odd_cycle)
                raise InvariantViolation(
                    f"breadth-first layer {idx} induces an odd cycle", (idx, cyc)
                )
            base = 1 if idx % 2 == 0 else 3
            for new, old in enumerate(old_ids):
                out[old] = base + check.two_coloring[new]
    coloring = Coloring(4, tuple(out))
    if not verify_coloring(G, coloring):
        raise InvariantViolation("layered coloring came out improper")
    return coloring


# A fixed proper 3-coloring of the ten-vertex reference graph, on the
# labeling used by fixtures.petersen().
PETERSEN_COLORING = (1, 2, 1, 2, 3, 2, 3, 3, 1, 1)


def combine_p3(G: Graph, cut: P3Cutset, side_colorings: list[Coloring]) -> Coloring:
    """Merge per-side 3-colorings of a P3-cutset into one for G.

    Side i colors G[sides[i] plus the cut path]. Palettes are permuted so
    every side sends v1 to 1 and v2 to 2; each side then gives v3 either 1
    or 3. A side where v1 and v3 share a {1,3}-Kempe component is stuck
    with its value; other sides can be flipped at v3. If two stuck sides
    disagree, their connecting paths close an odd induced cycle of length
    at least seven, which raises InvariantViolation (input outside the
    class).
    """
    cut.validate(G)
    if len(side_colorings) != len(cut.sides):
        raise ContractViolation("one coloring per side is required")
    v1, v2, v3 = cut.path
    pmask = cut.path_mask()
    sides = []
    for mask, col in zip(cut.sides, side_colorings):
        sub, old_ids = induced_subgraph(G, mask | pmask)
        if col.k != 3 or not verify_coloring(sub, col):
            raise ContractViolation("side colorings must be proper with three colors")
        pos = {old: new for new, old in enumerate(old_ids)}
        col = _permute_palette(col, {pos[v1]: 1, pos[v2]: 2})
        stuck = kempe_component(sub, col, (1, 3), pos[v3]).vertices >> pos[v1] & 1
        sides.append((sub, old_ids, pos, col, bool(stuck)))

    stuck_values = {s[3].colors[s[2][v3]] for s in sides if s[4]}
    if len(stuck_values) > 1:
        raise InvariantViolation(
            "sides force both parities at the cut path's end",
            tuple(_alternating_path(s[0], s[3], s[2][v1], s[2][v3], s[1]) for s in sides if s[4]),
        )
    target = stuck_values.pop() if stuck_values else 1

    out = [0] * G.n
    out[v1], out[v2], out[v3] = 1, 2, target
    for sub, old_ids, pos, col, stuck in sides:
        if col.colors[pos[v3]] != target:
            col = kempe_swap(sub, col, (1, 3), pos[v3])
        for new, old in enumerate(old_ids):
            out[old] = col.colors[new]
    merged = Coloring(3, tuple(out))
    if not verify_coloring(G, merged):
        raise InvariantViolation("merged coloring improper; sides were inconsistent")
    return merged


def _permute_palette(c: Coloring, want: dict[int, int]) -> Coloring:
    """Least palette permutation sending each anchor vertex to its target."""
    for perm in permutations(range(1, c.k + 1)):
        if all(perm[c.colors[v] - 1] == target for v, target in want.items()):
            return Coloring(c.k, tuple(perm[col - 1] for col in c.colors))
    raise ContractViolation("no palette permutation satisfies the anchors")


def _alternating_path(
    sub: Graph, col: Coloring, s: int, t: int, old_ids: tuple[int, ...]
) -> tuple[int, ...]:
    """Shortest path from s to t inside the {1,3}-colored subgraph,
    reported in the parent graph's vertex ids."""
    in_pair = 0
    for u in range(sub.n):
        if col.colors[u] in (1, 3):
            in_pair |= 1 << u
    parent = {s: -1}
    frontier = [s]
    while frontier and t not in parent:
        nxt = []
        for u in frontier:
            for z in iter_bits(sub.adj[u] & in_pair):
                if z not in parent:
                    parent[z] = u
                    nxt.append(z)
        frontier = nxt
    walk = [t]
    while parent[walk[-1]] >= 0:
        walk.append(parent[walk[-1]])
    walk.reverse()
    return tuple(old_ids[v] for v in walk)


def normalize_on_star(Gi: Graph, c: Coloring, v: int, X: int) -> Coloring:
    """Recolor so that v gets 1 and every vertex of X gets 2.

    After permuting the palette so v maps to 1, repeatedly find a
    {2,3}-Kempe component that contains a leaf colored 3 and no leaf
    colored 2, and swap it; each pass strictly shrinks the set of leaves
    colored 3, so at most |X| passes run. If every component containing a
    3-leaf also holds a 2-leaf, a shortest leaf-to-leaf path in the
    {2,3}-subgraph is odd with interior outside the cutset, certifying an
    invalid cutset or an input outside the class; InvariantViolation
    carries that path.
    """
    if X & ~Gi.adj[v]:
        raise ContractViolation("the center must be adjacent to every leaf")
    if c.k != 3 or not verify_coloring(Gi, c):
        raise ContractViolation("a proper three-coloring is required")
    c = _permute_palette(c, {v: 1})
    passes = 0
    limit = X.bit_count()
    while True:
        three_leaves = [u for u in iter_bits(X) if c.colors[u] == 3]
        if not three_leaves:
            break
        if passes > limit:
            raise InvariantViolation("leaf recoloring failed to terminate")
        swapped = False
        for u in three_leaves:
            comp = kempe_component(Gi, c, (2, 3), u).vertices
            if not any(c.colors[w] == 2 for w in iter_bits(comp & X)):
                c = kempe_swap(Gi, c, (2, 3), u)
                swapped = True
                break
        if not swapped:
            witness = _mixed_leaf_path(Gi, c, X)
            raise InvariantViolation(
                "every exchange component mixes both leaf colors", witness
            )
        passes += 1
    if not verify_coloring(Gi, c):
        raise InvariantViolation("normalization produced an improper coloring")
    return c


def _mixed_leaf_path(Gi: Graph, c: Coloring, X: int) -> tuple[int, ...]:
    """Shortest path in the {2,3}-subgraph from a leaf colored 2 to a leaf
    colored 3; its interior avoids the leaves, and it has odd length."""
    in_pair = 0
    for u in range(Gi.n):
        if c.colors[u] in (2, 3):
            in_pair |= 1 << u
    sources = [u for u in iter_bits(X) if c.colors[u] == 2]
    targets = {u for u in iter_bits(X) if c.colors[u] == 3}
    parent = {u: -1 for u in sources}
    frontier = list(sources)
    found = None
    while frontier and found is None:
        nxt = []
        for u in frontier:
            for z in iter_bits(Gi.adj[u] & in_pair):
                if z in parent:
                    continue
                parent[z] = u
                if z in targets:
                    found = z
                    break
                nxt.append(z)
            if found is not None:
                break
        frontier = nxt
    if found is None:
        return ()
    walk = [found]
    while parent[walk[-1]] >= 0:
        walk.append(parent[walk[-1]])
    walk.reverse()
    return tuple(walk)


def three_color(G: Graph, budget: SearchBudget | None = None) -> Coloring:
    """Proper 3-coloring by recursive decomposition.

    Components are handled independently. Each connected piece is split by
    decompose(): bipartite and the ten-vertex base case are colored
    directly, a low-degree vertex is deleted and re-inserted, and the
    three cutset variants recurse on their sides and recombine (palette
    permutation, combine_p3, normalize_on_star). Raises
    NoDecompositionFound when decompose finds nothing, which only happens
    off-class.
    """
    if budget is None:
        budget = SearchBudget.fresh()
    result = _color_any(G, budget, G.n + 2)
    if not verify_coloring(G, result):
        raise InvariantViolation("three-coloring came out improper")
    return result


def _color_any(G: Graph, budget: SearchBudget, depth: int) -> Coloring:
    if depth < 0:
        raise InvariantViolation("coloring recursion exceeded its depth bound")
    comps = components(G)
    if len(comps) <= 1:
        return _color_connected(G, budget, depth)
    out = [0] * G.n
    for comp in comps:
        sub, old_ids = induced_subgraph(G, comp)
        col = _color_connected(sub, budget, depth)
        for new, old in enumerate(old_ids):
            out[old] = col.colors[new]
    return Coloring(3, tuple(out))


def _color_connected(G: Graph, budget: SearchBudget, depth: int) -> Coloring:
    if depth < 0:
        raise InvariantViolation("coloring recursion exceeded its depth bound")
    outcome = decompose(G, budget)
    if outcome.variant == "bipartite":
        return Coloring(3, outcome.two_coloring)
    if outcome.variant == "low_degree":
        return _extend_low_degree(G, outcome.vertex, budget, depth)
    if outcome.variant == "petersen":
        out = [0] * G.n
        for p, host in enumerate(outcome.embedding.mapping):
            out[host] = PETERSEN_COLORING[p]
        return Coloring(3, tuple(out))
    if outcome.variant == "clique_cut":
        return _merge_clique(G, outcome.clique, budget, depth)
    if outcome.variant == "p3":
        cut = outcome.p3
        side_colorings = []
        for mask in cut.sides:
            sub, _ = induced_subgraph(G, mask | cut.path_mask())
            side_colorings.append(_color_any(sub, budget, depth - 1))
        return combine_p3(G, cut, side_colorings)
    if outcome.variant == "star":
        return _merge_star(G, outcome.star, budget, depth)
    raise NoDecompositionFound("no decomposition applies; input is outside the class")


def _extend_low_degree(G: Graph, v: int, budget: SearchBudget, depth: int) -> Coloring:
    sub, old_ids = induced_subgraph(G, G.full_mask() & ~(1 << v))
    col = _color_any(sub, budget, depth - 1)
    out = [0] * G.n
    for new, old in enumerate(old_ids):
        out[old] = col.colors[new]
    forbidden = {out[u] for u in iter_bits(G.adj[v])}
    out[v] = min(c for c in (1, 2, 3) if c not in forbidden)
    return Coloring(3, tuple(out))


def _merge_clique(G: Graph, clique: tuple[int, ...], budget: SearchBudget, depth: int) -> Coloring:
    cmask = 0
    for u in clique:
        cmask |= 1 << u
    want = {u: i + 1 for i, u in enumerate(clique)}
    out = [0] * G.n
    for u, target in want.items():
        out[u] = target
    for comp in components_within(G, G.full_mask() & ~cmask):
        sub, old_ids = induced_subgraph(G, comp | cmask)
        pos = {old: new for new, old in enumerate(old_ids)}
        col = _color_any(sub, budget, depth - 1)
        col = _permute_palette(col, {pos[u]: target for u, target in want.items()})
        for new, old in enumerate(old_ids):
            out[old] = col.colors[new]
    merged = Coloring(3, tuple(out))
    if not verify_coloring(G, merged):
        raise InvariantViolation("clique-cut merge improper; sides were inconsistent")
    return merged


def _merge_star(G: Graph, star, budget: SearchBudget, depth: int) -> Coloring:
    x = star.center
    X = star.leaves
    out = [0] * G.n
    out[x] = 1
    for u in iter_bits(X):
        out[u] = 2
    for comp in star.components:
        sub, old_ids = induced_subgraph(G, comp | X | 1 << x)
        pos = {old: new for new, old in enumerate(old_ids)}
        xmask = 0
        for u in iter_bits(X):
            xmask |= 1 << pos[u]
        col = _color_any(sub, budget, depth - 1)
        col = normalize_on_star(sub, col, pos[x], xmask)
        for new, old in enumerate(old_ids):
            out[old] = col.colors[new]
    merged = Coloring(3, tuple(out))
    if not verify_coloring(G, merged):
        raise InvariantViolation("star merge improper; certificate was not minimal")
    return merged


def chromatic_number_bruteforce(G: Graph, k_max: int) -> int | None:
    """Least number of colors in any proper coloring, or None when it
    exceeds k_max. Plain backtracking; vertices in descending-degree
    order, candidate colors capped at one above the count used so far."""
    if G.n == 0:
        return 0
    if k_max < 1:
        return None
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    adj = G.adj
    for k in range(1, k_max + 1):
        class_masks = [0] * (k + 1)

        def place(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            vb = 1 << v
            cap = min(k, used + 1)
            for col in range(1, cap + 1):
                if adj[v] & class_masks[col]:
                    continue
                class_masks[col] |= vb
                if place(i + 1, max(used, col)):
                    return True
                class_masks[col] &= ~vb
            return False

        if place(0, 0):
            return k
    return None
