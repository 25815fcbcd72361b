"""Induced-subgraph containment for small patterns and forbidden families."""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from minsep.errors import FamilyError, GraphError
from minsep.generators import CATALOG, canonical_name
from minsep.graph import Graph, bits, canonical_form, popcount

PATTERN_MAX_N = 8
#: Largest 4-subset count for which :func:`profile4` scans subsets directly;
#: past this, per-class backtracking is faster.
SCAN_BUDGET = 500

#: The 18 isomorphism classes of graphs on at most four vertices.
SMALL_NAMES = (
    "P1",
    "2P1", "P2",
    "3P1", "P2+P1", "P3", "K3",
    "4P1", "P2+2P1", "2P2", "P3+P1", "K3+P1", "claw", "P4", "paw", "C4", "diamond", "K4",
)  # fmt: skip

_KEY_BY_NAME = {name: canonical_form(CATALOG[name]) for name in SMALL_NAMES}
_NAME_BY_KEY = {canonical_form(g): name for name, g in CATALOG.items()}
# On at most four vertices the sorted degree sequence determines the
# isomorphism class, which makes profile scans cheap.
_KEY_BY_DEGREES = {
    (CATALOG[name].n, tuple(sorted(CATALOG[name].degrees()))): key for name, key in _KEY_BY_NAME.items()
}
assert len(_KEY_BY_DEGREES) == len(SMALL_NAMES)


def small_key(g: Graph) -> bytes:
    """Canonical form of a graph with at most four vertices (table lookup)."""
    if g.n > 4:
        raise GraphError("small_key only covers graphs on at most four vertices")
    return _KEY_BY_DEGREES[g.n, tuple(sorted(g.degrees()))]


def graph_name(g: Graph) -> str:
    """Catalog name if ``g`` is a named graph, else an explicit edge list."""
    if g.n <= 10:
        name = _NAME_BY_KEY.get(canonical_form(g))
        if name:
            return name
    return f"G{g.n}[" + " ".join(f"{u}-{v}" for u, v in g.edges()) + "]"


# -- containment -----------------------------------------------------------------


def _pattern_order(h: Graph) -> list[int]:
    # BFS order per component so most vertices have an earlier neighbor.
    order: list[int] = []
    seen = 0
    for start in sorted(range(h.n), key=lambda v: -h.degree(v)):
        if seen >> start & 1:
            continue
        seen |= 1 << start
        queue = [start]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(bits(h.adj[v] & ~seen), key=lambda u: -h.degree(u)):
                seen |= 1 << u
                queue.append(u)
    return order


def contains_induced(g: Graph, h: Graph) -> bool:
    """Whether some vertex subset of ``g`` induces a copy of ``h``."""
    if h.n > PATTERN_MAX_N:
        raise GraphError(f"pattern has {h.n} vertices; at most {PATTERN_MAX_N} supported")
    if h.n > g.n or h.m > g.m:
        return False
    if h.n == 0:
        return True
    order = _pattern_order(h)
    pos = {v: i for i, v in enumerate(order)}
    # For each pattern position: earlier positions adjacent / non-adjacent to it.
    earlier_adj = []
    earlier_non = []
    for i, v in enumerate(order):
        a = [pos[u] for u in bits(h.adj[v]) if pos[u] < i]
        earlier_adj.append(a)
        earlier_non.append([j for j in range(i) if j not in a])
    gadj = g.adj
    full = g.full_mask
    image = [0] * h.n
    hdeg = [h.degree(v) for v in order]
    gdeg = g.degrees()

    def extend(i: int, used: int) -> bool:
        if i == h.n:
            return True
        cand = full & ~used
        for j in earlier_adj[i]:
            cand &= gadj[image[j]]
        for j in earlier_non[i]:
            cand &= ~gadj[image[j]]
        d = hdeg[i]
        for w in bits(cand):
            if gdeg[w] < d:
                continue
            image[i] = w
            if extend(i + 1, used | 1 << w):
                return True
        return False

    return extend(0, 0)


def _profile_scan(g: Graph) -> frozenset[bytes]:
    adj = g.adj
    found: set[bytes] = set()
    for size in range(1, min(4, g.n) + 1):
        for combo in itertools.combinations(range(g.n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            degs = tuple(sorted(popcount(adj[v] & m) for v in combo))
            found.add(_KEY_BY_DEGREES[size, degs])
        if len(found) == len(SMALL_NAMES):
            break
    return frozenset(found)


def _profile_search(g: Graph) -> frozenset[bytes]:
    return frozenset(key for name, key in _KEY_BY_NAME.items() if contains_induced(g, CATALOG[name]))


def profile4(g: Graph, method: str = "auto") -> frozenset[bytes]:
    """Canonical forms of all induced subgraphs of ``g`` on at most four vertices."""
    if method == "auto":
        method = "scan" if comb(g.n, 4) <= SCAN_BUDGET else "search"
    if method == "scan":
        return _profile_scan(g)
    if method == "search":
        return _profile_search(g)
    raise ValueError(f"unknown profile method {method!r}")


@lru_cache(maxsize=1 << 14)
def cached_profile4(g: Graph) -> frozenset[bytes]:
    return profile4(g)


def profile_names(g: Graph) -> list[str]:
    p = profile4(g)
    return [name for name in SMALL_NAMES if _KEY_BY_NAME[name] in p]


# -- families ----------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GraphFamily:
    """A finite set of pairwise non-isomorphic graphs.

    Equality and hashing go through the set of canonical forms, so two
    families with isomorphic members compare equal.
    """

    members: tuple[Graph, ...]
    canonical: bool = False
    keys: frozenset[bytes] = field(init=False, repr=False)

    def __post_init__(self):
        uniq: list[Graph] = []
        keys: list[bytes] = []
        for g in self.members:
            key = canonical_form(g)
            if key not in keys:
                uniq.append(g)
                keys.append(key)
        object.__setattr__(self, "members", tuple(uniq))
        object.__setattr__(self, "keys", frozenset(keys))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphFamily):
            return NotImplemented
        return self.keys == other.keys

    def __hash__(self) -> int:
        return hash(self.keys)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def max_order(self) -> int:
        return max((g.n for g in self.members), default=0)

    def names(self) -> list[str]:
        return [graph_name(g) for g in self.members]

    def __str__(self) -> str:
        return "{" + ",".join(self.names()) + "}"


def family(names: Iterable[str] | str) -> GraphFamily:
    """Family from catalog names, e.g. ``family("4P1, C4")`` or ``family(["K3", "C4"])``."""
    if isinstance(names, str):
        return parse_family(names)
    return GraphFamily(tuple(CATALOG[canonical_name(n)] for n in names))


def parse_family(text: str) -> GraphFamily:
    """Parse the comma-separated family grammar; empty text is the empty family."""
    parts = text.split(",")
    if len(parts) == 1 and not parts[0].strip():
        return GraphFamily(())
    if any(not p.strip() for p in parts):
        raise FamilyError(f"empty entry in family string {text!r}")
    return GraphFamily(tuple(CATALOG[canonical_name(p)] for p in parts))


def _check_small(fam: GraphFamily) -> None:
    for g in fam.members:
        if g.n > 4:
            raise FamilyError(f"member {graph_name(g)} has {g.n} > 4 vertices")


def is_family_free(g: Graph, fam: GraphFamily) -> bool:
    """Whether ``g`` has no induced copy of a member (members on <= 4 vertices)."""
    _check_small(fam)
    return not (cached_profile4(g) & fam.keys)


def is_free_of(g: Graph, graphs: Iterable[Graph]) -> bool:
    """F-freeness by direct search; patterns up to eight vertices."""
    return not any(contains_induced(g, h) for h in graphs)


def dominates(f: GraphFamily, fp: GraphFamily) -> bool:
    """``F ⊴ F'``: every member of ``F'`` contains an induced member of ``F``."""
    if f.max_order <= 4:
        return all(cached_profile4(h) & f.keys for h in fp.members)
    return all(any(contains_induced(h, f0) for f0 in f.members) for h in fp.members)


def canonicalize_family(fam: GraphFamily) -> GraphFamily:
    """Drop members that contain another member; the free class is unchanged."""
    members = fam.members
    keep = []
    for i, g in enumerate(members):
        if not any(j != i and contains_induced(g, members[j]) for j in range(len(members))):
            keep.append(g)
    return GraphFamily(tuple(keep), canonical=True)
