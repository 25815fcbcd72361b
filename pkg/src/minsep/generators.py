"""Named small graphs and the extremal families with many minimal separators.

Constructors return plain :class:`~minsep.graph.Graph` objects.  Where a
separator certificate needs geometric information (wall coordinates, path
indices) it is returned in a side table next to the graph.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from minsep.errors import FamilyError, GraphError
from minsep.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    join,
    line_graph,
    path_graph,
)
from minsep.separators import is_minimal_separator_mask

# -- catalog -------------------------------------------------------------------


def _build_catalog() -> dict[str, Graph]:
    p1 = empty_graph(1)
    p2 = path_graph(2)
    p3 = path_graph(3)
    k3 = complete_graph(3)
    return {
        "P1": p1,
        "2P1": empty_graph(2),
        "3P1": empty_graph(3),
        "4P1": empty_graph(4),
        "P2": p2,
        "P2+P1": disjoint_union([p2, p1]),
        "P3": p3,
        "K3": k3,
        "P4": path_graph(4),
        "2P2": disjoint_union([p2, p2]),
        "P2+2P1": disjoint_union([p2, p1, p1]),
        "P3+P1": disjoint_union([p3, p1]),
        "K3+P1": disjoint_union([k3, p1]),
        "claw": from_edge_list(4, [(0, 1), (0, 2), (0, 3)]),
        "paw": from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
        "diamond": from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        "C4": cycle_graph(4),
        "K4": complete_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "C7": cycle_graph(7),
    }


CATALOG: dict[str, Graph] = _build_catalog()

ALIASES = {
    "K1": "P1",
    "K2": "P2",
    "C3": "K3",
    "2K1": "2P1",
    "3K1": "3P1",
    "4K1": "4P1",
    "2K2": "2P2",
    "K2+P1": "P2+P1",
    "P1+P2": "P2+P1",
    "K1,3": "claw",
    "K13": "claw",
    "coclaw": "K3+P1",
    "co-claw": "K3+P1",
    "P1+K3": "K3+P1",
    "codiamond": "P2+2P1",
    "co-diamond": "P2+2P1",
    "copaw": "P3+P1",
    "co-paw": "P3+P1",
    "P1+P3": "P3+P1",
    "K4-e": "diamond",
}

_LOOKUP = {k.lower(): k for k in CATALOG}
_LOOKUP.update({k.lower(): v for k, v in ALIASES.items()})


def canonical_name(name: str) -> str:
    """Resolve a (case- and whitespace-insensitive) name or alias."""
    key = "".join(name.split()).lower()
    try:
        return _LOOKUP[key]
    except KeyError:
        raise FamilyError(f"unknown graph name {name!r}") from None


def named(name: str) -> Graph:
    return CATALOG[canonical_name(name)]


# -- theta graphs and their line graphs ----------------------------------------


def theta(k: int, length: int) -> Graph:
    """Union of ``k`` internally disjoint ``a,b``-paths of the given length.

    ``a = 0``, ``b = 1``; path ``j`` has interior ``2 + j*(length-1) + i``
    for ``i`` in ``0 .. length-2`` listed from ``a`` towards ``b``.
    """
    if k < 2 or length < 1:
        raise GraphError(f"theta needs k >= 2 and length >= 1, got ({k}, {length})")
    inner = length - 1
    edges = []
    for j in range(k):
        path = [0] + [2 + j * inner + i for i in range(inner)] + [1]
        edges.extend(zip(path, path[1:]))
    return from_edge_list(k * inner + 2, edges)


def theta_separator(k: int, length: int, choice: Sequence[int]) -> frozenset[int]:
    """One interior vertex per path; ``choice[j]`` is its 1-based position."""
    if len(choice) != k:
        raise GraphError(f"need {k} choices, got {len(choice)}")
    if length < 2:
        raise GraphError("paths of length 1 have no interior")
    out = []
    for j, c in enumerate(choice):
        if not 1 <= c <= length - 1:
            raise GraphError(f"choice {c} outside [1, {length - 1}]")
        out.append(2 + j * (length - 1) + c - 1)
    return frozenset(out)


def theta_certificates(k: int, length: int) -> list[frozenset[int]]:
    return [theta_separator(k, length, c) for c in itertools.product(range(1, length), repeat=k)]


def line_theta(k: int, length: int) -> Graph:
    """Line graph of ``theta(k, length)`` built from its clique-and-paths shape.

    Two ``k``-cliques ``{a_j}`` and ``{b_j}`` joined by ``k`` disjoint paths
    of ``length`` vertices each, path ``j`` running ``a_j .. b_j`` on
    vertices ``j*length .. j*length + length - 1``.
    """
    if k < 2 or length < 2:
        raise GraphError(f"line_theta needs k >= 2 and length >= 2, got ({k}, {length})")
    edges = []
    for j in range(k):
        base = j * length
        edges.extend((base + i, base + i + 1) for i in range(length - 1))
    ends_a = [j * length for j in range(k)]
    ends_b = [j * length + length - 1 for j in range(k)]
    for ends in (ends_a, ends_b):
        edges.extend(itertools.combinations(ends, 2))
    return from_edge_list(k * length, edges)


def line_theta_separator(k: int, length: int, choice: Sequence[int]) -> frozenset[int]:
    """One vertex per path (1-based position); must not be either end clique."""
    if len(choice) != k:
        raise GraphError(f"need {k} choices, got {len(choice)}")
    if any(not 1 <= c <= length for c in choice):
        raise GraphError(f"choices must lie in [1, {length}]")
    if all(c == 1 for c in choice) or all(c == length for c in choice):
        raise GraphError("an end clique is not a separator")
    return frozenset(j * length + c - 1 for j, c in enumerate(choice))


def line_theta_certificates(k: int, length: int) -> list[frozenset[int]]:
    out = []
    for c in itertools.product(range(1, length + 1), repeat=k):
        if all(x == 1 for x in c) or all(x == length for x in c):
            continue
        out.append(line_theta_separator(k, length, c))
    return out


# -- grids and walls -------------------------------------------------------------


def grid(r: int, s: int) -> tuple[Graph, dict[tuple[int, int], int]]:
    if r < 2 or s < 2:
        raise GraphError(f"grid needs r, s >= 2, got ({r}, {s})")
    index = {(i, j): i * s + j for i in range(r) for j in range(s)}
    edges = [(index[i, j], index[i + 1, j]) for i in range(r - 1) for j in range(s)]
    edges += [(index[i, j], index[i, j + 1]) for i in range(r) for j in range(s - 1)]
    return from_edge_list(r * s, edges), index


@dataclass(frozen=True)
class WallCoordinates:
    h: int
    coords: tuple[tuple[int, int], ...]

    @property
    def index(self) -> dict[tuple[int, int], int]:
        return {c: v for v, c in enumerate(self.coords)}


def wall(h: int) -> tuple[Graph, WallCoordinates]:
    """Elementary wall of height ``h`` with vertex coordinates ``(column, row)``."""
    if h < 2:
        raise GraphError(f"wall needs h >= 2, got {h}")
    cols, rows = 2 * h + 2, h + 1
    nodes = {(i, j) for i in range(cols) for j in range(rows)}
    edges = {frozenset({(i, j), (i + 1, j)}) for i in range(cols - 1) for j in range(rows)}
    edges |= {frozenset({(i, j), (i, j + 1)}) for i in range(cols) for j in range(rows - 1)}
    for i in range(h + 1):
        for j in range((h - 1) // 2 + 1):
            edges.discard(frozenset({(2 * i + 1, 2 * j), (2 * i + 1, 2 * j + 1)}))
        for j in range(1, h // 2 + 1):
            edges.discard(frozenset({(2 * i, 2 * j - 1), (2 * i, 2 * j)}))
    degree = {v: 0 for v in nodes}
    for e in edges:
        for v in e:
            degree[v] += 1
    pendant = [v for v in nodes if degree[v] == 1]
    if len(pendant) != 2:
        raise GraphError(f"expected two degree-one vertices in the wall, found {len(pendant)}")
    for v in pendant:
        nodes.discard(v)
        edges = {e for e in edges if v not in e}
    coords = tuple(sorted(nodes))
    index = {c: v for v, c in enumerate(coords)}
    pairs = [tuple(index[c] for c in e) for e in edges]
    return from_edge_list(len(coords), pairs), WallCoordinates(h, coords)


def wall_path(h: int, x: Sequence[int]) -> list[tuple[int, int]]:
    """Coordinates ``v^0 .. v^h`` of the staircase column selected by ``x``."""
    if len(x) != h:
        raise GraphError(f"sequence length {len(x)} does not match height {h}")
    if any(b not in (0, 1) for b in x):
        raise GraphError("sequence must be binary")
    pts = [(2, 0)]
    for step in x:
        i, j = pts[-1]
        pts.append((i + step, j + 1))
    return pts


def wall_separator(h: int, x: Sequence[int]) -> frozenset[int]:
    _, coords = wall(h)
    index = coords.index
    return frozenset(index[p] for p in wall_path(h, x))


def wall_certificates(h: int) -> list[frozenset[int]]:
    _, coords = wall(h)
    index = coords.index
    return [frozenset(index[p] for p in wall_path(h, x)) for x in itertools.product((0, 1), repeat=h)]


def paired_sequences(h: int) -> list[tuple[int, ...]]:
    """Binary sequences of length ``h`` whose entries agree in consecutive pairs."""
    if h % 2:
        raise GraphError(f"height must be even, got {h}")
    return [tuple(b for b in half for _ in range(2)) for half in itertools.product((0, 1), repeat=h // 2)]


def line_wall(h: int) -> tuple[Graph, list[tuple[int, int]], WallCoordinates]:
    """Line graph of the wall, its edge map and the wall coordinates."""
    w, coords = wall(h)
    lg, edge_map = line_graph(w)
    return lg, edge_map, coords


def _line_wall_set(h, x, edge_index, index) -> frozenset[int]:
    if h % 2:
        raise GraphError(f"height must be even, got {h}")
    if len(x) != h or any(x[2 * i] != x[2 * i + 1] for i in range(h // 2)):
        raise GraphError(f"sequence {tuple(x)} does not agree in consecutive pairs")
    out = []
    for i, j in wall_path(h, x):
        u, v = index[i, j], index[i + 1, j]
        out.append(edge_index[(min(u, v), max(u, v))])
    return frozenset(out)


def line_wall_separator(h: int, x: Sequence[int]) -> frozenset[int]:
    """Edges ``v^j -- v^j + (1, 0)`` of the staircase, as line-graph vertices."""
    _, edge_map, coords = line_wall(h)
    edge_index = {e: i for i, e in enumerate(edge_map)}
    return _line_wall_set(h, x, edge_index, coords.index)


def line_wall_certificates(h: int) -> list[frozenset[int]]:
    _, edge_map, coords = line_wall(h)
    edge_index = {e: i for i, e in enumerate(edge_map)}
    index = coords.index
    return [_line_wall_set(h, x, edge_index, index) for x in paired_sequences(h)]


# -- C5 blow-ups ---------------------------------------------------------------


def c5_blowup(m: Sequence[int], t: int = 0) -> Graph:
    """``C5(m1..m5)`` joined with ``K_t``.

    Block ``i`` is a clique of size ``m[i]``; blocks ``i`` and ``i+1 mod 5``
    are complete to each other.  The ``t`` apex vertices come last.
    """
    if len(m) != 5:
        raise GraphError("need exactly five block sizes")
    if any(mi < 1 for mi in m) or t < 0:
        raise GraphError(f"block sizes must be >= 1 and t >= 0, got {tuple(m)}, {t}")
    starts = [sum(m[:i]) for i in range(5)]
    blocks = [range(starts[i], starts[i] + m[i]) for i in range(5)]
    edges = []
    for i in range(5):
        edges.extend(itertools.combinations(blocks[i], 2))
        edges.extend(itertools.product(blocks[i], blocks[(i + 1) % 5]))
    g = from_edge_list(sum(m), edges)
    if t:
        g = join([g, complete_graph(t)])
    return g


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes or any(x < 1 for x in sizes):
        raise GraphError("part sizes must be positive")
    return join([empty_graph(x) for x in sizes])


# -- certificates ----------------------------------------------------------------


@dataclass(frozen=True)
class CertificateCheck:
    family: str
    params: tuple
    n: int
    claimed: int
    verified: int
    distinct: bool

    @property
    def ok(self) -> bool:
        return self.distinct and self.verified == self.claimed


def verify_certificates(g: Graph, sets: Sequence[frozenset[int]], family: str = "", params: tuple = ()) -> CertificateCheck:
    """Check every set is a minimal separator of ``g`` and that all are distinct."""
    verified = 0
    for sep in sets:
        mask = 0
        for v in sep:
            mask |= 1 << v
        if is_minimal_separator_mask(g, mask):
            verified += 1
    return CertificateCheck(family, tuple(params), g.n, len(sets), verified, len(set(sets)) == len(sets))


def certified_family(family: str, params: Sequence[int]) -> tuple[Graph, list[frozenset[int]]]:
    """Graph and separator certificate family of one of the extremal constructions."""
    if family == "theta":
        k, length = params
        return theta(k, length), theta_certificates(k, length)
    if family == "line-theta":
        k, length = params
        return line_theta(k, length), line_theta_certificates(k, length)
    if family == "wall":
        (h,) = params
        return wall(h)[0], wall_certificates(h)
    if family == "line-wall":
        (h,) = params
        return line_wall(h)[0], line_wall_certificates(h)
    raise GraphError(f"family {family!r} has no certificate construction")


def certified_bound(family: str, params: Sequence[int]) -> int:
    """Lower bound on the separator count guaranteed by the construction."""
    if family == "theta":
        k, length = params
        return (length - 1) ** k
    if family == "line-theta":
        k, length = params
        return length**k - 2
    if family == "wall":
        (h,) = params
        return 2**h
    if family == "line-wall":
        (h,) = params
        return 2 ** (h // 2)
    raise GraphError(f"family {family!r} has no certificate construction")


def build(family: str, params: Sequence) -> Graph:
    """Dispatch used by the CLI ``gen`` command."""
    try:
        if family == "theta":
            return theta(*map(int, params))
        if family == "line-theta":
            return line_theta(*map(int, params))
        if family == "wall":
            return wall(*map(int, params))[0]
        if family == "line-wall":
            return line_wall(*map(int, params))[0]
        if family == "grid":
            return grid(*map(int, params))[0]
        if family == "c5blowup":
            vals = list(map(int, params))
            if len(vals) not in (5, 6):
                raise GraphError("c5blowup takes m1..m5 and optional t")
            return c5_blowup(vals[:5], vals[5] if len(vals) == 6 else 0)
        if family == "named":
            (name,) = params
            return named(name)
    except TypeError as exc:
        raise GraphError(f"wrong number of parameters for {family}: {exc}") from None
    raise GraphError(f"unknown family {family!r}")

