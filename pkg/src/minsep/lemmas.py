"""Executable checks of the counting identities and bounds on minimal separators.

Every ``check_*`` function recomputes both sides exactly with
:func:`minsep.separators.separator_masks` and returns ``True`` when the
stated relation holds.  Inputs outside the class a statement is about raise
:class:`~minsep.errors.PreconditionError`.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass, field
from math import comb

from minsep.errors import ConsistencyError, GraphError, PreconditionError
from minsep.generators import c5_blowup, complete_multipartite, named
from minsep.graph import (
    Graph,
    bits,
    complete_graph,
    disjoint_union,
    empty_graph,
    enumerate_labeled_graphs,
    induced_subgraph_mask,
    join,
    mask_of,
    path_graph,
    popcount,
)
from minsep.patterns import contains_induced, family, is_family_free
from minsep.separators import full_component_masks, separator_count, separator_masks

# -- helpers ---------------------------------------------------------------------


def _lift(mask: int, verts: Sequence[int]) -> int:
    """Map a mask over ``0..len(verts)-1`` back onto the host vertices ``verts``."""
    out = 0
    for i in bits(mask):
        out |= 1 << verts[i]
    return out


def _drop(mask: int, v: int) -> int:
    """Re-index a mask after deleting vertex ``v`` (higher indices shift down)."""
    low = mask & ((1 << v) - 1)
    high = mask >> (v + 1)
    return low | (high << v)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionError(message)


def _free_of(g: Graph, names: str) -> bool:
    return is_family_free(g, family(names))


# -- graph operations ------------------------------------------------------------


def check_union_formula(g: Graph) -> bool:
    """s(G) = sum of s over the components, plus one for the empty separator."""
    _require(not g.is_connected(), "union formula needs a disconnected graph")
    parts = [induced_subgraph_mask(g, c) for c in g.component_masks]
    return separator_count(g) == sum(separator_count(h) for h in parts) + 1


def _join_lift_ok(g: Graph, parts: Sequence[int]) -> bool:
    full = g.full_mask
    lifted: set[int] = set()
    total = 0
    for p in parts:
        verts = list(bits(p))
        sub = induced_subgraph_mask(g, p)
        for s_mask in separator_masks(sub):
            lifted.add(_lift(s_mask, verts) | (full & ~p))
            total += 1
    # Lifts from different parts are distinct, so the count must add up too.
    return lifted == set(separator_masks(g)) and total == len(lifted)


def check_join_formula(graphs: Sequence[Graph]) -> bool:
    """Separators of a join are exactly ``S_i + (V - V(G_i))`` for ``S_i`` in some part."""
    _require(len(graphs) >= 2, "join formula needs at least two graphs")
    g = join(graphs)
    parts = []
    offset = 0
    for h in graphs:
        parts.append(((1 << h.n) - 1) << offset)
        offset += h.n
    return _join_lift_ok(g, parts)


def check_co_components(g: Graph) -> bool:
    """Join lift applied to the co-component decomposition of ``g``."""
    _require(not g.is_co_connected(), "graph is co-connected")
    return _join_lift_ok(g, g.co_component_masks)


# -- vertex operations -------------------------------------------------------------


@dataclass
class VertexOpsReport:
    checked: dict[str, int] = field(default_factory=dict)
    failures: list[tuple[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def _tick(self, name: str, passed: bool, detail) -> None:
        self.checked[name] = self.checked.get(name, 0) + 1
        if not passed:
            self.failures.append((name, detail))


def universal_vertices(g: Graph) -> list[int]:
    full = g.full_mask
    return [v for v in range(g.n) if g.adj[v] | (1 << v) == full]


def simplicial_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.is_clique(g.adj[v])]


def true_twin_pairs(g: Graph) -> list[tuple[int, int]]:
    closed = [nb | (1 << v) for v, nb in enumerate(g.adj)]
    return [(v, w) for v, w in itertools.combinations(range(g.n), 2) if closed[v] == closed[w]]


def near_twin_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs with ``N(v) - {w} == N(w) - {v}`` (true or false twins)."""
    adj = g.adj
    return [
        (v, w)
        for v, w in itertools.combinations(range(g.n), 2)
        if adj[v] & ~(1 << w) == adj[w] & ~(1 << v)
    ]


def check_vertex_ops(g: Graph) -> VertexOpsReport:
    """Deletion identities for universal, twin and simplicial vertices, plus monotonicity.

    Also checks that every separator minus one of its vertices is a
    separator of the smaller graph, and that near-twins are always in or
    out of a separator together.
    """
    rep = VertexOpsReport()
    seps = separator_masks(g)
    s_g = len(seps)
    if g.n >= 2:
        minus = {v: induced_subgraph_mask(g, g.full_mask & ~(1 << v)) for v in range(g.n)}
        s_minus = {v: separator_count(h) for v, h in minus.items()}
        for v in range(g.n):
            rep._tick("monotone", s_minus[v] <= s_g, (v, s_minus[v], s_g))
        for v in universal_vertices(g):
            rep._tick("universal", s_minus[v] == s_g, (v, s_minus[v], s_g))
        for v, w in true_twin_pairs(g):
            rep._tick("true-twin", s_minus[v] == s_g, ((v, w), s_minus[v], s_g))
        for v in simplicial_vertices(g):
            rep._tick("simplicial", s_minus[v] <= s_g <= s_minus[v] + 1, (v, s_minus[v], s_g))
        for s_mask in seps:
            for v in bits(s_mask):
                reduced = _drop(s_mask & ~(1 << v), v)
                rep._tick("delete-in-S", reduced in separator_masks(minus[v]), (s_mask, v))
    for v, w in near_twin_pairs(g):
        for s_mask in seps:
            rep._tick("near-twin", (s_mask >> v & 1) == (s_mask >> w & 1), ((v, w), s_mask))
    return rep


# -- bounds ------------------------------------------------------------------------


def check_cograph_bound(g: Graph) -> bool:
    """P4-free graphs have fewer than 2n/3 minimal separators."""
    _require(_free_of(g, "P4"), "graph is not P4-free")
    return 3 * separator_count(g) < 2 * g.n


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search (ties to smallest index)."""
    weight = [0] * g.n
    done = 0
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not done >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        done |= 1 << v
        for u in bits(g.adj[v] & ~done):
            weight[u] += 1
    return order


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    """Each vertex's later neighbors form a clique."""
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = mask_of(u for u in bits(g.adj[v]) if pos[u] > pos[v])
        if not g.is_clique(later):
            return False
    return True


def perfect_elimination_ordering(g: Graph) -> list[int] | None:
    order = list(reversed(maximum_cardinality_search(g)))
    return order if is_perfect_elimination_ordering(g, order) else None


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def check_chordal_bound(g: Graph) -> bool:
    _require(is_chordal(g), "graph is not chordal")
    return separator_count(g) <= g.n - 1


def check_2p2_separator_shapes(g: Graph) -> bool:
    """In a 2P2-free graph every minimal separator is the neighborhood of a vertex."""
    _require(_free_of(g, "2P2"), "graph is not 2P2-free")
    neighborhoods = set(g.adj)
    seps = separator_masks(g)
    return all(s in neighborhoods for s in seps) and len(seps) <= g.n


def check_p2_2p1_c4_bound(g: Graph) -> bool:
    """Count bound for {P2+2P1, C4}-free graphs: at most C(n,2) * (n+1)."""
    _require(_free_of(g, "P2+2P1,C4"), "graph is not {P2+2P1, C4}-free")
    return separator_count(g) <= comb(g.n, 2) * (g.n + 1)


# -- Ramsey numbers ------------------------------------------------------------------


def _ramsey_exact(k: int, l: int) -> int | None:
    if k < 1 or l < 1:
        raise GraphError("Ramsey arguments must be positive")
    if k == 1 or l == 1:
        return 1
    if k == 2:
        return l
    if l == 2:
        return k
    if (k, l) == (3, 3):
        return 6
    return None


def _has_clique(adj: Sequence[int], cand: int, k: int) -> bool:
    if k == 0:
        return True
    if popcount(cand) < k:
        return False
    for v in bits(cand):
        # Only extend with later vertices so each clique is tried once.
        if _has_clique(adj, cand & adj[v] & ~((2 << v) - 1), k - 1):
            return True
    return False


def has_clique_or_independent(g: Graph, k: int, l: int) -> bool:
    """Whether ``g`` has a clique on ``k`` vertices or an independent set on ``l``."""
    full = g.full_mask
    co_adj = [full & ~(nb | (1 << v)) for v, nb in enumerate(g.adj)]
    return _has_clique(g.adj, full, k) or _has_clique(co_adj, full, l)


class RamseyTable:
    """Certified exact Ramsey numbers plus user-supplied upper bounds.

    ``R(k, l)`` is the least order forcing a ``k``-clique or an independent
    set of size ``l``.  Only the trivial lines and ``R(3, 3) = 6`` are stored
    as exact values.
    """

    def __init__(self):
        self._upper: dict[tuple[int, int], int] = {}

    def exact(self, k: int, l: int) -> int | None:
        return _ramsey_exact(k, l)

    def add_upper_bound(self, k: int, l: int, value: int) -> None:
        known = self.exact(k, l)
        if known is not None and value < known:
            raise GraphError(f"R({k},{l}) = {known}, so {value} is not an upper bound")
        # Upper bounds must stay monotone in each argument.
        for (a, b), ub in self._upper.items():
            if a <= k and b <= l and ub > value:
                raise GraphError(f"bound {value} for R({k},{l}) is below bound {ub} for R({a},{b})")
            if a >= k and b >= l and ub < value:
                raise GraphError(f"bound {value} for R({k},{l}) exceeds bound {ub} for R({a},{b})")
        self._upper[k, l] = value

    def upper_bound(self, k: int, l: int) -> int:
        known = self.exact(k, l)
        if known is not None:
            return known
        try:
            return self._upper[k, l]
        except KeyError:
            raise GraphError(f"no certified value or upper bound for R({k},{l})") from None

    def certify(self, k: int, l: int, max_n: int = 6) -> bool:
        """Re-derive an exact entry by exhaustive search (orders up to ``max_n``)."""
        r = self.exact(k, l)
        if r is None:
            raise GraphError(f"R({k},{l}) is not an exact entry")
        if r > max_n:
            raise GraphError(f"R({k},{l}) = {r} exceeds the exhaustive limit {max_n}")
        forced = all(has_clique_or_independent(g, k, l) for g in enumerate_labeled_graphs(r, limit=max_n))
        if r == 1:
            return forced
        tight = not all(has_clique_or_independent(g, k, l) for g in enumerate_labeled_graphs(r - 1, limit=max_n))
        return forced and tight


RAMSEY = RamseyTable()


def verify_ramsey_value_33() -> bool:
    """Every 6-vertex graph has a triangle or 3 independent vertices; C5 has neither."""
    c5 = named("C5")
    if has_clique_or_independent(c5, 3, 3):
        return False
    return all(has_clique_or_independent(g, 3, 3) for g in enumerate_labeled_graphs(6))


def ramsey_family(k: int, l: int):
    """The pair ``P2 + kP1`` and ``K_l + P2`` as graphs."""
    return disjoint_union([path_graph(2), empty_graph(k)]), disjoint_union([complete_graph(l), path_graph(2)])


def check_ramsey_bound(g: Graph, k: int, l: int, ub: int) -> bool:
    """Each separator is ``N(C)`` for a full component with fewer than ``ub`` vertices.

    ``g`` must be ``{P2 + kP1, K_l + P2}``-free and ``ub >= R(l, k)``.
    """
    exact = RAMSEY.exact(l, k)
    if exact is not None and ub < exact:
        raise PreconditionError(f"ub={ub} is below R({l},{k}) = {exact}")
    for h in ramsey_family(k, l):
        _require(not contains_induced(g, h), f"graph is not {{P2+{k}P1, K{l}+P2}}-free")
    for s_mask in separator_masks(g):
        comps = full_component_masks(g, s_mask)
        if not any(popcount(c) <= ub - 1 and g.neighborhood_mask(c) == s_mask for c in comps):
            return False
    return True


# -- structure theorems ----------------------------------------------------------------


@dataclass(frozen=True)
class StructureVerdict:
    tag: str  # "complete-multipartite", "K3-free", "chordal", "c5-blowup"
    params: tuple[int, ...] = ()
    vertices: frozenset[int] = frozenset()


def _is_complete_multipartite(g: Graph) -> tuple[int, ...] | None:
    parts = g.co_component_masks
    if all(g.is_independent(p) for p in parts):
        return tuple(sorted(popcount(p) for p in parts))
    return None


def paw_free_structure(g: Graph) -> list[StructureVerdict]:
    """Each component of a paw-free graph is complete multipartite or triangle-free."""
    _require(_free_of(g, "paw"), "graph is not paw-free")
    out = []
    for comp in g.component_masks:
        h = induced_subgraph_mask(g, comp)
        verts = frozenset(bits(comp))
        sizes = _is_complete_multipartite(h)
        if sizes is not None:
            out.append(StructureVerdict("complete-multipartite", sizes, verts))
        elif _free_of(h, "K3"):
            out.append(StructureVerdict("K3-free", (), verts))
        else:
            raise ConsistencyError("paw-free component is neither multipartite nor triangle-free", counterexample=h)
    return out


def resynthesize(v: StructureVerdict) -> Graph | None:
    if v.tag == "complete-multipartite":
        return complete_multipartite(v.params)
    if v.tag == "c5-blowup":
        return c5_blowup(v.params[:5], v.params[5])
    return None


def structure_3p1c4(g: Graph) -> StructureVerdict:
    """Chordal, or a C5 blow-up joined with a clique, with recovered parameters."""
    _require(_free_of(g, "3P1,C4"), "graph is not {3P1, C4}-free")
    if is_chordal(g):
        return StructureVerdict("chordal", (), frozenset(range(g.n)))
    full = g.full_mask
    apex = mask_of(universal_vertices(g))
    rest = full & ~apex
    closed = {v: (g.adj[v] | (1 << v)) & rest for v in bits(rest)}
    classes: dict[int, int] = {}
    for v, c in closed.items():
        classes[c] = classes.get(c, 0) | (1 << v)
    blocks = sorted(classes.values(), key=lambda m: (m & -m))

    def fail(msg):
        raise ConsistencyError(f"non-chordal {{3P1, C4}}-free graph does not decompose: {msg}", counterexample=g)

    if len(blocks) != 5:
        fail(f"{len(blocks)} twin classes")

    def touches(a, b):
        return bool(g.adj[(a & -a).bit_length() - 1] & b)

    nbrs = {i: [j for j in range(5) if j != i and touches(blocks[i], blocks[j])] for i in range(5)}
    if any(len(x) != 2 for x in nbrs.values()):
        fail("twin classes do not form a cycle")
    cycle = [0, min(nbrs[0])]
    while len(cycle) < 5:
        prev, cur = cycle[-2], cycle[-1]
        nxt = [j for j in nbrs[cur] if j != prev][0]
        cycle.append(nxt)
    if cycle[0] not in nbrs[cycle[-1]] or len(set(cycle)) != 5:
        fail("twin classes do not form a 5-cycle")
    ordered = [blocks[i] for i in cycle]
    sizes = tuple(popcount(b) for b in ordered)
    t = popcount(apex)
    # Explicit isomorphism onto c5_blowup(sizes, t): blocks in cycle order, apex last.
    perm_src = [v for b in ordered for v in bits(b)] + list(bits(apex))
    target = c5_blowup(sizes, t)
    pos = {v: i for i, v in enumerate(perm_src)}
    for u, v in itertools.combinations(range(g.n), 2):
        if g.has_edge(u, v) != target.has_edge(pos[u], pos[v]):
            fail(f"adjacency of {u},{v} disagrees with the blow-up")
    return StructureVerdict("c5-blowup", sizes + (t,), frozenset(range(g.n)))

