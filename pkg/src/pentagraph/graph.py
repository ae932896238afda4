"""Immutable bitmask graphs and the handful of BFS primitives everything
else is built on.

Vertices are ``0..n-1``. A vertex set is a plain ``int`` used as a bitmask,
so set algebra is ``&``, ``|``, ``&~`` and membership is ``mask >> v & 1``.
Graphs are small by design (default cap 64 vertices, hard cap 128); the
point of the library is exactness on desk-scale instances, not throughput
on large ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ContractViolation, GraphConstructionError

DEFAULT_MAX_VERTICES = 64
HARD_MAX_VERTICES = 128

INFINITY = math.inf


def iter_bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """An immutable simple undirected graph stored as one adjacency bitmask
    per vertex.

    Use :func:`make_graph` to build one from an edge list; the raw
    constructor trusts its arguments and is meant for internal callers that
    already hold a consistent adjacency table.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        self.n = n
        self.adj = adj

    # Graphs are values: equality and hashing follow the labeled structure.
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return self.adj[u] >> v & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def neighbors(self, v: int) -> list[int]:
        return bit_list(self.adj[v])


def make_graph(n: int, edges, max_n: int | None = None) -> Graph:
    """Build a validated Graph from an iterable of (u, v) pairs.

    Duplicate edges collapse silently; self loops and out-of-range
    endpoints raise GraphConstructionError. ``max_n`` lifts the default
    vertex cap of 64 up to the hard cap of 128.
    """
    cap = DEFAULT_MAX_VERTICES if max_n is None else max_n
    if cap > HARD_MAX_VERTICES:
        raise GraphConstructionError(f"cap {cap} exceeds hard limit {HARD_MAX_VERTICES}")
    if not 0 <= n <= cap:
        raise GraphConstructionError(f"vertex count {n} outside [0, {cap}]")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphConstructionError(f"self loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def induced_subgraph(G: Graph, keep: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the vertex set ``keep`` (a bitmask).

    Returns ``(H, old_ids)`` where ``old_ids[new] = old``; new labels are
    the kept vertices in ascending old order. The inverse map, when
    needed, is ``{old: new for new, old in enumerate(old_ids)}``.
    """
    old_ids = bit_list(keep & G.full_mask())
    index = {old: new for new, old in enumerate(old_ids)}
    adj = []
    for old in old_ids:
        row = G.adj[old] & keep
        packed = 0
        for w in iter_bits(row):
            packed |= 1 << index[w]
        adj.append(packed)
    return Graph(len(old_ids), tuple(adj)), tuple(old_ids)


def components(G: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by smallest member."""
    return components_within(G, G.full_mask())


def components_within(G: Graph, allowed: int) -> list[int]:
    """Components of the induced subgraph on ``allowed``, without relabeling."""
    adj = G.adj
    out = []
    left = allowed
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & allowed & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


@dataclass(frozen=True)
class Layering:
    """BFS distance classes from ``source``; ``layers[k]`` is the bitmask of
    vertices at distance exactly k. Only the source's component appears."""

    source: int
    layers: tuple[int, ...]

    def layer_of(self, v: int) -> int | None:
        for k, mask in enumerate(self.layers):
            if mask >> v & 1:
                return k
        return None


def bfs_layers(G: Graph, source: int) -> Layering:
    if not 0 <= source < G.n:
        raise ContractViolation(f"source {source} not a vertex of the graph")
    adj = G.adj
    layers = []
    seen = frontier = 1 << source
    while frontier:
        layers.append(frontier)
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return Layering(source, tuple(layers))


def distance(G: Graph, u: int, v: int):
    """Shortest path length between u and v; INFINITY when disconnected."""
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise ContractViolation("distance endpoints must be vertices")
    if u == v:
        return 0
    adj = G.adj
    seen = frontier = 1 << u
    target = 1 << v
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= adj[w]
        frontier = nxt & ~seen
        if frontier & target:
            return d
        seen |= frontier
    return INFINITY


@dataclass(frozen=True)
class BipartiteCheck:
    """Result of is_bipartite: a proper 2-coloring (tuple of 0/1 per vertex)
    when the graph is bipartite, otherwise an odd closed walk witness."""

    two_coloring: tuple[int, ...] | None
    odd_cycle: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.two_coloring is not None


def is_bipartite(G: Graph) -> BipartiteCheck:
    """BFS 2-coloring; on failure returns an odd closed walk as witness.

    The witness is a vertex sequence whose consecutive pairs (cyclically)
    are edges and whose length is odd.
    """
    n = G.n
    adj = G.adj
    side = [-1] * n
    parent = [-1] * n
    for s in range(n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = [s]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for y in iter_bits(adj[x]):
                if side[y] < 0:
                    side[y] = side[x] ^ 1
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    return BipartiteCheck(None, _odd_walk(parent, x, y))
    return BipartiteCheck(tuple(side), None)


def _odd_walk(parent: list[int], x: int, y: int) -> tuple[int, ...]:
    # Join the two root paths at their lowest common ancestor; the edge
    # (x, y) closes an odd cycle because both ends sit on the same side.
    px = [x]
    while parent[px[-1]] >= 0:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] >= 0:
        py.append(parent[py[-1]])
    on_px = {v: i for i, v in enumerate(px)}
    j = next(i for i, v in enumerate(py) if v in on_px)
    meet = py[j]
    cycle = px[: on_px[meet] + 1] + list(reversed(py[:j]))
    return tuple(cycle)


def shortest_cycle(G: Graph) -> tuple[int, ...] | None:
    """A shortest cycle as a vertex tuple, or None in a forest.

    Computed edge by edge: the shortest cycle through an edge (u, v) is
    that edge plus a shortest u-v path avoiding it. Ties are broken by the
    least canonical rotation among the per-edge candidates, so the answer
    is stable across runs.
    """
    best_len = None
    best_cycle = None
    for u, v in G.edges():
        if best_len is not None and best_len == 3:
            break
        path = _shortest_path_avoiding_edge(G, u, v, best_len)
        if path is None:
            continue
        cand = canonical_cycle(tuple(path))
        length = len(path)
        if best_len is None or length < best_len or (length == best_len and cand < best_cycle):
            best_len = length
            best_cycle = cand
    return best_cycle


def _shortest_path_avoiding_edge(G, u, v, cap):
    """Shortest u-v path not using the edge (u, v); None if none shorter
    than ``cap`` exists. Returns the path as a vertex list."""
    adj = G.adj
    parent = {u: -1}
    frontier = 1 << u
    seen = frontier
    d = 0
    while frontier:
        d += 1
        if cap is not None and d + 1 > cap:
            # Even a hit at this depth gives a cycle longer than the best.
            return None
        nxt_masks = []
        nxt = 0
        for w in iter_bits(frontier):
            out = adj[w]
            if d == 1 and w == u:
                out &= ~(1 << v)
            grow = out & ~seen
            if grow:
                nxt_masks.append((w, grow & ~nxt))
                nxt |= grow
        if not nxt:
            return None
        for w, grow in nxt_masks:
            for z in iter_bits(grow):
                parent[z] = w
        seen |= nxt
        if nxt >> v & 1:
            path = [v]
            while path[-1] != u:
                path.append(parent[path[-1]])
            path.reverse()
            return path
        frontier = nxt
    return None


def canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Least rotation/reflection of a cyclic vertex sequence."""
    k = len(cycle)
    best = None
    doubled = cycle + cycle
    for i in range(k):
        for seq in (doubled[i : i + k], tuple(reversed(doubled[i : i + k]))):
            if best is None or seq < best:
                best = seq
    return best


def girth(G: Graph):
    """Length of a shortest cycle; INFINITY for forests."""
    c = shortest_cycle(G)
    return INFINITY if c is None else len(c)
