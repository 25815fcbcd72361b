"""Minimal separators: recognition, enumeration and counting.

A set ``S`` is a minimal separator iff ``G - S`` has at least two
``S``-full components, i.e. components in which every vertex of ``S`` has a
neighbor.  Two enumerators are provided:

* :func:`minimal_separators_brute` tests that criterion on every subset and
  serves as the oracle;
* :func:`minimal_separators` grows the family from the close separators
  ``N(C)``, ``C`` a component of ``G - N[v]``, by repeatedly expanding
  ``S`` through ``G - (S + N(x))`` for ``x`` in ``S`` until nothing new
  appears.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np
from numba import njit

from minsep.errors import GraphError
from minsep.graph import Graph, bits, component_masks, popcount, vertex_mask

BRUTE_MAX_N = 20
#: Above this size the brute-force scan runs in the compiled kernel.
BRUTE_JIT_MIN_N = 11

Method = Literal["brute", "delay"]


@dataclass(frozen=True)
class SeparatorReport:
    """Result of an enumeration run.

    ``separators`` is ``None`` for count-only runs.  ``truncated`` is set when
    a ``limit`` stopped the run early; ``count`` is then a lower bound.
    """

    count: int
    separators: tuple[frozenset[int], ...] | None
    method: Method
    ab_pair: tuple[int, int] | None = None
    truncated: bool = False

    def __post_init__(self):
        if self.separators is not None:
            if len(self.separators) != self.count:
                raise ValueError("separator list length does not match count")
            if len(set(self.separators)) != self.count:
                raise ValueError("separator list has duplicates")


def sort_key(s: frozenset[int]) -> tuple[int, tuple[int, ...]]:
    return len(s), tuple(sorted(s))


def _sorted_sets(masks) -> tuple[frozenset[int], ...]:
    return tuple(sorted((frozenset(bits(m)) for m in masks), key=sort_key))


def full_component_masks(g: Graph, s_mask: int) -> list[int]:
    rest = g.full_mask & ~s_mask
    return [c for c in component_masks(g, rest) if g.neighborhood_mask(c) & s_mask == s_mask]


def _count_full(adj, s_mask: int, rest: int, need: int = 2) -> int:
    # Counts S-full components of G[rest], stopping once ``need`` are found.
    found = 0
    while rest:
        comp = frontier = rest & -rest
        reach = 0
        while frontier:
            nb = 0
            for v in bits(frontier):
                nb |= adj[v]
            reach |= nb
            frontier = nb & rest & ~comp
            comp |= frontier
        rest &= ~comp
        if reach & s_mask == s_mask:
            found += 1
            if found >= need:
                return found
    return found


def s_full_components(g: Graph, s: frozenset[int] | set[int]) -> list[frozenset[int]]:
    """Components of ``G - S`` that are ``S``-full."""
    s_mask = vertex_mask(g, s)
    if s_mask == g.full_mask:
        raise GraphError("S must be a proper subset of V(G)")
    return [frozenset(bits(c)) for c in full_component_masks(g, s_mask)]


def is_minimal_separator_mask(g: Graph, s_mask: int) -> bool:
    return _count_full(g.adj, s_mask, g.full_mask & ~s_mask) >= 2


def is_minimal_separator(g: Graph, s) -> bool:
    return is_minimal_separator_mask(g, vertex_mask(g, s))


@njit(cache=True)
def _brute_kernel(adj, n):
    full = (np.int64(1) << n) - 1
    out = np.empty(1 << n, dtype=np.int64)
    k = 0
    for i in range(np.int64(1) << n):
        s = i ^ (i >> 1)
        rest = full & ~s
        found = 0
        while rest and found < 2:
            comp = rest & -rest
            frontier = comp
            reach = np.int64(0)
            while frontier:
                nb = np.int64(0)
                for v in range(n):
                    if (frontier >> v) & 1:
                        nb |= adj[v]
                reach |= nb
                frontier = nb & rest & ~comp
                comp |= frontier
            rest &= ~comp
            if reach & s == s:
                found += 1
        if found >= 2:
            out[k] = s
            k += 1
    return out[:k]


def _brute_masks(g: Graph) -> list[int]:
    if g.n >= BRUTE_JIT_MIN_N:
        return [int(s) for s in _brute_kernel(np.array(g.adj, dtype=np.int64), g.n)]
    return _brute_masks_py(g)


def _brute_masks_py(g: Graph) -> list[int]:
    adj = g.adj
    full = g.full_mask
    out = []
    # Gray-code order: consecutive subsets differ in one vertex.
    for i in range(1 << g.n):
        s = i ^ (i >> 1)
        if _count_full(adj, s, full & ~s) >= 2:
            out.append(s)
    return out


def minimal_separators_brute(g: Graph, limit: int = BRUTE_MAX_N) -> SeparatorReport:
    if g.n > limit:
        raise GraphError(f"brute-force enumeration refused for n={g.n} > {limit}")
    seps = _sorted_sets(_brute_masks(g))
    return SeparatorReport(len(seps), seps, "brute")


def _expand(g: Graph, s_mask: int, x: int) -> list[int]:
    adj = g.adj
    rest = g.full_mask & ~(s_mask | adj[x])
    return [g.neighborhood_mask(c) for c in component_masks(g, rest & ~(1 << x))]


def iter_separator_masks(g: Graph):
    """Yield every minimal separator of ``g`` once, as a mask, in discovery order."""
    adj = g.adj
    full = g.full_mask
    seen: set[int] = set()
    queue: deque[int] = deque()
    for v in range(g.n):
        closed = adj[v] | (1 << v)
        for c in component_masks(g, full & ~closed):
            s = g.neighborhood_mask(c)
            if s not in seen:
                seen.add(s)
                queue.append(s)
                yield s
    while queue:
        s = queue.popleft()
        for x in bits(s):
            for t in _expand(g, s, x):
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
                    yield t


@lru_cache(maxsize=1 << 17)
def separator_masks(g: Graph) -> frozenset[int]:
    """All minimal separators of ``g`` as masks (memoized per graph)."""
    return frozenset(iter_separator_masks(g))


def minimal_separators(g: Graph, *, count_only: bool = False, limit: int | None = None) -> SeparatorReport:
    found = []
    count = 0
    truncated = False
    for s in iter_separator_masks(g):
        if limit is not None and count >= limit:
            truncated = True
            break
        count += 1
        if not count_only:
            found.append(s)
    seps = None if count_only else _sorted_sets(found)
    return SeparatorReport(count, seps, "delay", truncated=truncated)


def enumerate_separators(g: Graph, method: Method = "delay", **kwargs) -> SeparatorReport:
    if method == "brute":
        return minimal_separators_brute(g, **kwargs)
    if method == "delay":
        return minimal_separators(g, **kwargs)
    raise ValueError(f"unknown method {method!r}")


def separator_count(g: Graph) -> int:
    """Number of minimal separators of ``g`` (memoized)."""
    return len(separator_masks(g))


def minimal_ab_separators(g: Graph, a: int, b: int, method: Method = "delay") -> SeparatorReport:
    """All minimal ``a,b``-separators.

    ``S`` is a minimal ``a,b``-separator iff the components of ``G - S``
    containing ``a`` and ``b`` are distinct and both ``S``-full.
    """
    vertex_mask(g, (a, b))
    if a == b:
        raise GraphError("a and b must be distinct")
    if g.has_edge(a, b):
        raise GraphError(f"vertices {a} and {b} are adjacent")
    if method == "brute":
        pool = _brute_masks(g) if g.n <= BRUTE_MAX_N else None
        if pool is None:
            raise GraphError(f"brute-force enumeration refused for n={g.n} > {BRUTE_MAX_N}")
    else:
        pool = iter_separator_masks(g)
    out = []
    for s_mask in pool:
        if s_mask >> a & 1 or s_mask >> b & 1:
            continue
        full = full_component_masks(g, s_mask)
        ca = next((c for c in full if c >> a & 1), 0)
        if ca and not ca >> b & 1 and any(c >> b & 1 for c in full):
            out.append(s_mask)
    seps = _sorted_sets(out)
    return SeparatorReport(len(seps), seps, method, ab_pair=(a, b))


def closed_neighborhood_separator(g: Graph, s_mask: int) -> int | None:
    """Vertex ``v`` with a full component ``{v}`` (then ``S = N(v)``), if any."""
    for c in full_component_masks(g, s_mask):
        if popcount(c) == 1:
            return c.bit_length() - 1
    return None
