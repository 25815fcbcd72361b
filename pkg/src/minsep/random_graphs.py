"""Seeded random instances for the graph classes the bound checks are about."""

from __future__ import annotations

import random

from minsep.errors import GraphError, SamplingError
from minsep.graph import Graph, bits, from_edge_list, induced_subgraph_mask, popcount
from minsep.patterns import contains_induced

#: Edge probabilities that make {P2 + kP1, K_l + P2}-free draws reasonably common.
RAMSEY_FREE_P = {(2, 2): 0.85, (3, 3): 0.82, (2, 3): 0.8, (3, 2): 0.85}


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_graph(n: int, p: float, seed=0) -> Graph:
    """G(n, p) draw."""
    if n < 1:
        raise GraphError("n must be >= 1")
    rng = _rng(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def random_cograph(n: int, seed=0) -> Graph:
    """Cograph from a random union/join expression tree on ``n`` leaves."""
    if n < 1:
        raise GraphError("n must be >= 1")
    rng = _rng(seed)
    edges: list[tuple[int, int]] = []

    def build(verts: list[int]) -> None:
        if len(verts) == 1:
            return
        cut = rng.randint(1, len(verts) - 1)
        left, right = verts[:cut], verts[cut:]
        if rng.random() < 0.5:
            edges.extend((u, v) for u in left for v in right)
        build(left)
        build(right)

    verts = list(range(n))
    rng.shuffle(verts)
    build(verts)
    return from_edge_list(n, edges)


def random_chordal(n: int, seed=0) -> Graph:
    """Chordal graph grown by attaching each new vertex to a random clique.

    The attachment set is a random subset of a maximal clique containing a
    random existing vertex, so every new vertex is simplicial when added.
    """
    if n < 1:
        raise GraphError("n must be >= 1")
    rng = _rng(seed)
    adj = [0] * n
    for v in range(1, n):
        if rng.random() < 0.1:
            continue  # start a new component now and then
        u = rng.randrange(v)
        clique = 1 << u
        cand = adj[u]
        while cand:
            w = rng.choice(list(bits(cand)))
            clique |= 1 << w
            cand &= adj[w]
        members = [w for w in bits(clique) if w == u or rng.random() < 0.7]
        for w in members:
            adj[v] |= 1 << w
            adj[w] |= 1 << v
    return from_edge_list(n, [(u, v) for v in range(n) for u in bits(adj[v]) if u < v])


def random_induced_subgraph(g: Graph, seed=0) -> tuple[Graph, int]:
    """A random nonempty induced subgraph of ``g`` and the vertex mask it came from."""
    rng = _rng(seed)
    while True:
        mask = rng.getrandbits(g.n) & g.full_mask
        if popcount(mask):
            return induced_subgraph_mask(g, mask), mask


def random_ramsey_free(n: int, k: int, l: int, seed=0, *, p: float | None = None, max_draws: int = 20_000) -> Graph:
    """Rejection sample a ``{P2 + kP1, K_l + P2}``-free graph on ``n`` vertices."""
    from minsep.lemmas import ramsey_family

    rng = _rng(seed)
    p = RAMSEY_FREE_P.get((k, l), 0.8) if p is None else p
    forbidden = ramsey_family(k, l)
    for _ in range(max_draws):
        g = random_graph(n, p, rng)
        if not any(contains_induced(g, h) for h in forbidden):
            return g
    raise SamplingError(f"no {{P2+{k}P1, K{l}+P2}}-free graph on {n} vertices after {max_draws} draws (p={p})")
