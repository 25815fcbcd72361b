"""Verification suites: exhaustive small-graph sweeps, random samples and certificates.

Each suite produces :class:`CheckResult` rows, one per check.  A check fails
on its first counterexample, which is kept as an edge list.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable, Iterator
from dataclasses import asdict, dataclass, field

from minsep.errors import ConsistencyError, GraphError, PreconditionError
from minsep.generators import certified_bound, certified_family, verify_certificates
from minsep.graph import Graph, enumerate_labeled_graphs, induced_subgraph, is_isomorphic
from minsep.lemmas import (
    RAMSEY,
    check_2p2_separator_shapes,
    check_chordal_bound,
    check_co_components,
    check_cograph_bound,
    check_p2_2p1_c4_bound,
    check_ramsey_bound,
    check_union_formula,
    check_vertex_ops,
    is_chordal,
    paw_free_structure,
    resynthesize,
    structure_3p1c4,
    verify_ramsey_value_33,
)
from minsep.patterns import family, is_family_free
from minsep.random_graphs import random_chordal, random_cograph, random_graph, random_induced_subgraph, random_ramsey_free
from minsep.separators import separator_count

SUITES = ("ops", "bounds", "structure", "certificates")

CLAIMS = {
    "union-formula": "s(G) of a disconnected graph is the sum over its components plus one",
    "join-lift": "minimal separators of a join are S_i plus all vertices outside part i",
    "monotone": "deleting a vertex never increases s",
    "universal": "deleting a universal vertex preserves s",
    "true-twin": "deleting one of two true twins preserves s",
    "simplicial": "deleting a simplicial vertex lowers s by at most one",
    "near-twin": "a minimal separator contains both or neither of two near-twins",
    "delete-in-S": "S minus v is a minimal separator of G - v for v in S",
    "monotone-random": "s(H) <= s(G) for random induced subgraphs H of G",
    "cograph-bound": "P4-free graphs satisfy 3 s(G) < 2 n",
    "chordal-bound": "chordal graphs satisfy s(G) <= n - 1",
    "2p2-shapes": "in 2P2-free graphs every minimal separator is some N(v)",
    "p2-2p1-c4-bound": "{P2+2P1, C4}-free graphs satisfy s(G) <= C(n,2)(n+1)",
    "ramsey-bound": "in {P2+kP1, K_l+P2}-free graphs each separator is N(C) with |C| < R(l,k)",
    "ramsey-33": "R(3,3) = 6, with C5 as the extremal 5-vertex graph",
    "ramsey-table": "stored Ramsey values agree with exhaustive search",
    "paw-free-structure": "components of paw-free graphs are K3-free or complete multipartite",
    "3p1-c4-structure": "{3P1, C4}-free graphs are chordal or a C5 blow-up joined with a clique",
    "wall-certificates": "walls W_h have at least 2^h minimal separators",
    "theta-certificates": "theta graphs have at least (l-1)^k minimal separators",
    "line-wall-certificates": "line graphs of walls have at least 2^(h/2) minimal separators",
    "line-theta-certificates": "line graphs of theta graphs have at least l^k - 2 minimal separators",
}


def describe(g: Graph) -> str:
    return f"n={g.n} edges=" + " ".join(f"{u}-{v}" for u, v in g.edges())


@dataclass
class CheckResult:
    suite: str
    check_id: str
    paper_ref: str
    status: str = "pass"  # pass | fail
    checked: int = 0
    counterexample: str | None = None

    def record(self, ok: bool, witness: Callable[[], str]) -> None:
        self.checked += 1
        if not ok and self.status == "pass":
            self.status = "fail"
            self.counterexample = witness()

    def as_dict(self) -> dict:
        d = asdict(self)
        if d["counterexample"] is None:
            del d["counterexample"]
        return d


@dataclass
class SuiteReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status == "pass" for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status != "pass"]


class _Collector:
    def __init__(self, suite: str):
        self.suite = suite
        self.by_id: dict[str, CheckResult] = {}

    def __getitem__(self, check_id: str) -> CheckResult:
        if check_id not in self.by_id:
            self.by_id[check_id] = CheckResult(self.suite, check_id, CLAIMS[check_id])
        return self.by_id[check_id]

    def check(self, check_id: str, ok: bool, g: Graph | None = None, detail: object = None) -> None:
        def witness() -> str:
            parts = [describe(g)] if g is not None else []
            if detail is not None:
                parts.append(str(detail))
            return "; ".join(parts)

        self[check_id].record(ok, witness)

    def results(self) -> list[CheckResult]:
        return list(self.by_id.values())


def all_small_graphs(max_n: int) -> Iterator[Graph]:
    """Every labeled graph on ``1..max_n`` vertices."""
    for n in range(1, max_n + 1):
        yield from enumerate_labeled_graphs(n, limit=max(max_n, 6))


def _guarded(col: _Collector, check_id: str, g: Graph, fn) -> None:
    try:
        ok = fn()
    except (ConsistencyError, PreconditionError) as exc:
        col.check(check_id, False, g, exc)
    else:
        col.check(check_id, ok, g)


# -- suites ----------------------------------------------------------------------------


def run_ops(max_n: int = 6, seed: int = 0, samples: int = 500, sample_max_n: int = 14) -> list[CheckResult]:
    col = _Collector("ops")
    for g in all_small_graphs(max_n):
        if not g.is_connected():
            _guarded(col, "union-formula", g, lambda: check_union_formula(g))
        if not g.is_co_connected():
            _guarded(col, "join-lift", g, lambda: check_co_components(g))
        rep = check_vertex_ops(g)
        for name in rep.checked:
            fails = [d for n, d in rep.failures if n == name]
            col.check(name, not fails, g, fails[0] if fails else None)
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(2, sample_max_n)
        g = random_graph(n, rng.uniform(0.15, 0.7), rng)
        h, mask = random_induced_subgraph(g, rng)
        col.check("monotone-random", separator_count(h) <= separator_count(g), g, f"subset mask {mask:#x}")
    return col.results()


def run_bounds(
    max_n: int = 6,
    seed: int = 0,
    cographs: int = 100,
    cograph_max_n: int = 40,
    chordals: int = 100,
    chordal_max_n: int = 25,
    ramsey_samples: int = 20,
) -> list[CheckResult]:
    col = _Collector("bounds")
    p4, two_p2, p2c4 = family("P4"), family("2P2"), family("P2+2P1,C4")
    for g in all_small_graphs(max_n):
        if is_family_free(g, p4):
            _guarded(col, "cograph-bound", g, lambda: check_cograph_bound(g))
        if is_chordal(g):
            _guarded(col, "chordal-bound", g, lambda: check_chordal_bound(g))
        if is_family_free(g, two_p2):
            _guarded(col, "2p2-shapes", g, lambda: check_2p2_separator_shapes(g))
        if is_family_free(g, p2c4):
            _guarded(col, "p2-2p1-c4-bound", g, lambda: check_p2_2p1_c4_bound(g))
    rng = random.Random(seed)
    for _ in range(cographs):
        g = random_cograph(rng.randint(1, cograph_max_n), rng)
        _guarded(col, "cograph-bound", g, lambda: check_cograph_bound(g))
    for _ in range(chordals):
        g = random_chordal(rng.randint(1, chordal_max_n), rng)
        _guarded(col, "chordal-bound", g, lambda: check_chordal_bound(g))
    for k, l in ((2, 2), (3, 3)):
        ub = RAMSEY.upper_bound(l, k)
        for _ in range(ramsey_samples):
            g = random_ramsey_free(rng.randint(5, 14), k, l, rng)
            _guarded(col, "ramsey-bound", g, lambda: check_ramsey_bound(g, k, l, ub))
    col.check("ramsey-33", verify_ramsey_value_33())
    for k, l in ((1, 4), (2, 3), (3, 2), (2, 4), (3, 3)):
        col.check("ramsey-table", RAMSEY.certify(k, l), detail=f"R({k},{l})")
    return col.results()


def run_structure(max_n: int = 6, seed: int = 0) -> list[CheckResult]:
    col = _Collector("structure")
    paw, c4 = family("paw"), family("3P1,C4")
    for g in all_small_graphs(max_n):
        if is_family_free(g, paw):
            _guarded(col, "paw-free-structure", g, lambda: _paw_resynthesizes(g))
        if is_family_free(g, c4):
            _guarded(col, "3p1-c4-structure", g, lambda: _c5_resynthesizes(g))
    return col.results()


def _paw_resynthesizes(g: Graph) -> bool:
    for v in paw_free_structure(g):
        comp = induced_subgraph(g, v.vertices)
        if v.tag == "K3-free":
            if not is_family_free(comp, family("K3")):
                return False
        elif not is_isomorphic(resynthesize(v), comp):
            return False
    return True


def _c5_resynthesizes(g: Graph) -> bool:
    v = structure_3p1c4(g)
    if v.tag == "chordal":
        return is_chordal(g)
    return is_isomorphic(resynthesize(v), g)


CERTIFICATE_CASES = {
    "wall": [(h,) for h in (2, 3, 4, 5)],
    "theta": [(2, 3), (3, 3), (4, 3), (2, 4)],
    "line-wall": [(h,) for h in (2, 4, 6)],
    "line-theta": [(k, 2) for k in (2, 3, 4)],
}


def run_certificates(max_n: int = 6, seed: int = 0) -> list[CheckResult]:
    col = _Collector("certificates")
    for fam, cases in CERTIFICATE_CASES.items():
        for params in cases:
            g, sets = certified_family(fam, params)
            chk = verify_certificates(g, sets, fam, params)
            ok = chk.ok and chk.claimed >= certified_bound(fam, params)
            col.check(f"{fam}-certificates", ok, detail=f"params={params} verified={chk.verified}/{chk.claimed}")
    return col.results()


RUNNERS = {"ops": run_ops, "bounds": run_bounds, "structure": run_structure, "certificates": run_certificates}


def run_suites(names: Iterable[str] | str = "all", max_n: int = 6, seed: int = 0) -> SuiteReport:
    if isinstance(names, str):
        names = SUITES if names == "all" else (names,)
    report = SuiteReport()
    for name in names:
        if name not in RUNNERS:
            raise GraphError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
        report.results.extend(RUNNERS[name](max_n=max_n, seed=seed))
    return report
