"""Immutable simple undirected graphs over dense vertex indices.

Adjacency is stored as one Python ``int`` bitmask per vertex; bit ``u`` of
``adj[v]`` is set iff ``uv`` is an edge.  Vertex subsets are passed around
internally as masks and exposed publicly as ``frozenset`` objects.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Sequence
from functools import cached_property, lru_cache

from minsep.errors import GraphError

INFINITY = math.inf

#: Largest vertex count accepted by :func:`canonical_form`.
CANONICAL_MAX_N = 10
#: Largest vertex count accepted by :func:`enumerate_labeled_graphs` by default.
EXHAUSTIVE_MAX_N = 6


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """A finite simple undirected graph on vertices ``0 .. n-1``.

    Instances are immutable and hashable; two graphs compare equal iff they
    have the same vertex count and identical (labeled) edge sets.
    """

    __slots__ = ("n", "adj", "_hash", "__dict__")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for n={n}")
        full = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside [0, {n})")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v, nb in enumerate(adj):
            for u in bits(nb):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = tuple(adj)
        self._hash = hash((n, self.adj))

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> Graph:
        # Skips validation; callers guarantee a symmetric irreflexive matrix.
        g = object.__new__(cls)
        g.n = n
        g.adj = tuple(adj)
        g._hash = hash((n, g.adj))
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self) -> int:
        return self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(nb) for nb in self.adj]

    def neighborhood_mask(self, mask: int) -> int:
        """Open neighborhood N(X) of the vertex set encoded by ``mask``."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def is_clique(self, mask: int) -> bool:
        return all((self.adj[v] | 1 << v) & mask == mask for v in bits(mask))

    def is_independent(self, mask: int) -> bool:
        return all(self.adj[v] & mask == 0 for v in bits(mask))

    # -- derived attributes (immutable, so cached) --------------------------

    @cached_property
    def component_masks(self) -> tuple[int, ...]:
        return tuple(component_masks(self, self.full_mask))

    @cached_property
    def co_component_masks(self) -> tuple[int, ...]:
        return complement(self).component_masks

    @cached_property
    def independence_number(self) -> int:
        if self.n > 64:
            raise GraphError("independence number is only computed for n <= 64")
        return _max_independent(self.adj, self.full_mask)

    @cached_property
    def girth(self) -> float:
        return _girth(self)

    def is_connected(self) -> bool:
        return len(self.component_masks) <= 1

    def is_co_connected(self) -> bool:
        return len(self.co_component_masks) <= 1


def _require_nonempty(n: int) -> None:
    if n < 1:
        raise GraphError("graphs must have at least one vertex")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n >= 1`` vertices; duplicate edges are collapsed."""
    _require_nonempty(n)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, adj)


def empty_graph(n: int) -> Graph:
    _require_nonempty(n)
    return Graph._trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    _require_nonempty(n)
    full = (1 << n) - 1
    return Graph._trusted(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._trusted(g.n, [full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)])


def component_masks(g: Graph, within: int) -> list[int]:
    """Components of ``G[within]`` as masks, ordered by smallest vertex."""
    adj = g.adj
    out = []
    rest = within
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nb = 0
            for v in bits(frontier):
                nb |= adj[v]
            frontier = nb & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in g.component_masks]


def co_components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in g.co_component_masks]


def vertex_mask(g: Graph, vertices: Iterable[int]) -> int:
    """Validate ``vertices`` against ``g`` and return them as a mask."""
    m = 0
    for v in vertices:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise GraphError(f"vertex {v!r} is not in [0, {g.n})")
        m |= 1 << v
    return m


def induced_subgraph_mask(g: Graph, mask: int) -> Graph:
    """Subgraph induced by ``mask``, relabeled in increasing vertex order.

    May return the zero-vertex graph; public callers use
    :func:`induced_subgraph`, which rejects an empty vertex set.
    """
    verts = list(bits(mask))
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        adj.append(mask_of(pos[u] for u in bits(g.adj[v] & mask)))
    return Graph._trusted(len(verts), adj)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    mask = vertex_mask(g, vertices)
    if not mask:
        raise GraphError("induced subgraph on an empty vertex set")
    return induced_subgraph_mask(g, mask)


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph_mask(g, g.full_mask & ~(1 << v))


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    if not graphs:
        raise GraphError("disjoint union of an empty list")
    adj: list[int] = []
    offset = 0
    for h in graphs:
        adj.extend(nb << offset for nb in h.adj)
        offset += h.n
    return Graph._trusted(offset, adj)


def join(graphs: Sequence[Graph]) -> Graph:
    if not graphs:
        raise GraphError("join of an empty list")
    total = sum(h.n for h in graphs)
    full = (1 << total) - 1
    adj: list[int] = []
    offset = 0
    for h in graphs:
        block = ((1 << h.n) - 1) << offset
        adj.extend((nb << offset) | (full & ~block) for nb in h.adj)
        offset += h.n
    return Graph._trusted(total, adj)


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``g`` plus the map from line-graph vertex to source edge."""
    edges = g.edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph has no vertices")
    incident: list[int] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)]
    return Graph._trusted(len(edges), adj), edges


def _girth(g: Graph) -> float:
    # A shortest cycle never has a chord, so the shortest cycle found by BFS
    # from every root is also the shortest induced cycle.
    best = INFINITY
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        layer = [root]
        while layer:
            nxt = []
            for v in layer:
                for u in bits(adj[v]):
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        parent[u] = v
                        nxt.append(u)
                    elif parent[v] != u:
                        best = min(best, dist[u] + dist[v] + 1)
            if best <= 2 * dist[layer[0]] + 1:
                break
            layer = nxt
    return best


def girth(g: Graph) -> float:
    """Length of a shortest induced cycle, ``math.inf`` for forests."""
    return g.girth


def _max_independent(adj: Sequence[int], cand: int) -> int:
    if not cand:
        return 0
    # Branch on a vertex of maximum degree within cand; degree <= 1 is greedy.
    best_v, best_d = -1, -1
    for v in bits(cand):
        d = popcount(adj[v] & cand)
        if d > best_d:
            best_v, best_d = v, d
    if best_d <= 1:
        # Disjoint edges and isolated vertices: one per component.
        count = 0
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v) & ~adj[v]
            count += 1
        return count
    v = best_v
    with_v = 1 + _max_independent(adj, cand & ~(1 << v) & ~adj[v])
    without_v = _max_independent(adj, cand & ~(1 << v))
    return max(with_v, without_v)


def independence_number(g: Graph) -> int:
    return g.independence_number


def enumerate_labeled_graphs(n: int, limit: int = EXHAUSTIVE_MAX_N) -> Iterator[Graph]:
    """Yield all ``2^(n choose 2)`` labeled graphs on ``n`` vertices."""
    _require_nonempty(n)
    if n > limit:
        raise GraphError(f"exhaustive enumeration refused for n={n} > {limit}")
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield graph_from_code(n, code, pairs)


def graph_from_code(n: int, code: int, pairs: Sequence[tuple[int, int]] | None = None) -> Graph:
    """Decode the bit ``i`` of ``code`` as presence of the ``i``-th pair in lexicographic order."""
    if pairs is None:
        pairs = list(itertools.combinations(range(n), 2))
    adj = [0] * n
    i = 0
    while code:
        if code & 1:
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        code >>= 1
        i += 1
    return Graph._trusted(n, adj)


# -- canonical form (individualization-refinement) --------------------------

def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition (cells as masks)."""
    changed = True
    while changed:
        changed = False
        out: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cell):
                key = tuple(popcount(adj[v] & c) for c in cells)
                groups[key] = groups.get(key, 0) | (1 << v)
            if len(groups) > 1:
                changed = True
            out.extend(groups[k] for k in sorted(groups))
        cells = out
    return cells


def _encode(adj: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    code = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (row >> order[j] & 1)
    return code


def _search(adj: Sequence[int], cells: list[int], best: list[int]) -> None:
    cells = _refine(adj, cells)
    for idx, cell in enumerate(cells):
        if cell & (cell - 1):
            break
    else:
        order = [c.bit_length() - 1 for c in cells]
        code = _encode(adj, order)
        if code > best[0]:
            best[0] = code
        return
    for v in bits(cell):
        single = 1 << v
        _search(adj, cells[:idx] + [single, cell & ~single] + cells[idx + 1:], best)


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (``n <= 10``)."""
    if g.n > CANONICAL_MAX_N:
        raise GraphError(f"canonical form refused for n={g.n} > {CANONICAL_MAX_N}")
    if g.n == 0:
        return b"\x00"
    # Initial partition by degree; the maximum code over all leaves of the
    # search tree is independent of the labeling.
    by_deg: dict[int, int] = {}
    for v, nb in enumerate(g.adj):
        by_deg[popcount(nb)] = by_deg.get(popcount(nb), 0) | (1 << v)
    best = [-1]
    _search(g.adj, [by_deg[d] for d in sorted(by_deg)], best)
    width = (g.n * (g.n - 1) // 2 + 7) // 8
    return bytes([g.n]) + best[0].to_bytes(max(width, 1), "big")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex ``perm[v]`` plays the role of ``v`` in ``g``."""
    adj = [0] * g.n
    for v, nb in enumerate(g.adj):
        adj[perm[v]] = mask_of(perm[u] for u in bits(nb))
    return Graph._trusted(g.n, adj)
