"""Tame / not-tame classification of F-free classes for families on <= 4 vertices.

A class is *tame* when its graphs have polynomially many minimal separators.
For families of graphs with at most four vertices the answer is decided by
comparing ``F`` under the ``⊴`` order with sixteen maximal tame families and
three minimal non-tame ones; two families remain open.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from minsep.errors import ConsistencyError, OutOfScopeError
from minsep.graph import canonical_form
from minsep.patterns import (
    SMALL_NAMES,
    GraphFamily,
    canonicalize_family,
    contains_induced,
    dominates,
    family,
    graph_name,
)
from minsep.generators import CATALOG


class Verdict(enum.Enum):
    TAME = "Tame"
    NOT_TAME = "NotTame"
    OPEN = "Open"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Witness:
    family: GraphFamily
    theorem: int  # 1: tame side, 2: non-tame side
    rule: str  # roman clause label


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witness: GraphFamily | None = None
    rule_id: str | None = None
    theorem: int | None = None

    @property
    def exit_code(self) -> int:
        return {Verdict.TAME: 0, Verdict.NOT_TAME: 1, Verdict.OPEN: 2}[self.verdict]

    def __str__(self) -> str:
        if self.verdict is Verdict.OPEN:
            return "Open"
        return f"{self.verdict} (rule {self.rule_id}, witness {self.witness})"


_TAME_RULES = [
    ("i", ["P4"]),
    ("i", ["2P2"]),
    *[("ii", [f, "paw"]) for f in ("4P1", "P2+2P1", "P3+P1", "claw")],
    *[("iii", [f, "K3+P1"]) for f in ("4P1", "P2+2P1", "P3+P1", "claw")],
    *[("iv", [f, "K4"]) for f in ("4P1", "P2+2P1", "P3+P1")],
    *[("v", [f, "C4"]) for f in ("P2+2P1", "P3+P1")],
    ("vi", ["4P1", "C4", "diamond"]),
]

_NONTAME_RULES = [
    ("i", ["3P1", "diamond"]),
    ("ii", ["claw", "K4", "C4", "diamond"]),
    ("iii", ["K3", "C4"]),
]

OPEN_FAMILIES = (family("4P1,C4"), family("4P1,claw,C4"))


@lru_cache(maxsize=None)
def _witnesses(theorem: int) -> tuple[Witness, ...]:
    table = _TAME_RULES if theorem == 1 else _NONTAME_RULES
    return tuple(Witness(canonicalize_family(family(names)), theorem, rule) for rule, names in table)


def tame_witnesses() -> list[Witness]:
    return list(_witnesses(1))


def nontame_witnesses() -> list[Witness]:
    return list(_witnesses(2))


def tame_witness_families() -> list[GraphFamily]:
    """The sixteen maximal tame families, in clause order."""
    return [w.family for w in tame_witnesses()]


def nontame_witness_families() -> list[GraphFamily]:
    """The three minimal non-tame families, in clause order."""
    return [w.family for w in nontame_witnesses()]


def classify(fam: GraphFamily) -> Classification:
    for g in fam.members:
        if g.n > 4:
            raise OutOfScopeError(f"member {graph_name(g)} has {g.n} vertices; only families on <= 4 vertices are covered")
    canon = canonicalize_family(fam)
    if canon in OPEN_FAMILIES:
        return Classification(Verdict.OPEN)
    for w in tame_witnesses():
        if dominates(canon, w.family):
            return Classification(Verdict.TAME, w.family, w.rule, 1)
    for w in nontame_witnesses():
        if dominates(w.family, canon):
            return Classification(Verdict.NOT_TAME, w.family, w.rule, 2)
    raise ConsistencyError(f"family {canon} matches no witness", counterexample=str(canon))


# -- survey over all antichains -----------------------------------------------------


@dataclass(frozen=True)
class SurveyRow:
    family: tuple[str, ...]
    verdict: Verdict
    witness: tuple[str, ...] | None
    rule: str | None
    theorem: int | None


@dataclass
class SurveyReport:
    rows: list[SurveyRow]
    counts: dict[Verdict, int]
    both: list[tuple[str, ...]]  # families matching a tame and a non-tame witness
    neither: list[tuple[str, ...]]  # non-open families matching no witness
    open_families: list[tuple[str, ...]]
    mismatches: list[tuple[str, ...]]  # classify() disagreeing with the matrix path

    @property
    def consistent(self) -> bool:
        return not (self.both or self.neither or self.mismatches) and len(self.open_families) == 2


def containment_matrix(names=SMALL_NAMES) -> dict[tuple[str, str], bool]:
    """``(a, b) -> True`` iff graph ``a`` is an induced subgraph of graph ``b``."""
    return {(a, b): contains_induced(CATALOG[b], CATALOG[a]) for a in names for b in names}


def antichains(names=SMALL_NAMES, below=None) -> list[tuple[str, ...]]:
    """All antichains (including the empty one) of the induced-subgraph order."""
    below = below or containment_matrix(names)
    out: list[tuple[str, ...]] = []

    def grow(start: int, chosen: list[str]) -> None:
        out.append(tuple(chosen))
        for i in range(start, len(names)):
            x = names[i]
            if all(not below[x, y] and not below[y, x] for y in chosen):
                chosen.append(x)
                grow(i + 1, chosen)
                chosen.pop()

    grow(0, [])
    return out


def survey_all_families() -> SurveyReport:
    """Classify every antichain over the 18 small classes and cross-check the dichotomy."""
    below = containment_matrix()

    def dom(f, fp):
        return all(any(below[a, b] for a in f) for b in fp)

    tame = [(rule, tuple(names)) for rule, names in _TAME_RULES]
    nontame = [(rule, tuple(names)) for rule, names in _NONTAME_RULES]
    open_keys = {frozenset(canonical_form(g) for g in f.members) for f in OPEN_FAMILIES}

    rows: list[SurveyRow] = []
    both, neither, opened, mismatches = [], [], [], []
    counts = {v: 0 for v in Verdict}
    for fam in antichains(SMALL_NAMES, below):
        t_hit = next(((r, w) for r, w in tame if dom(fam, w)), None)
        n_hit = next(((r, w) for r, w in nontame if dom(w, fam)), None)
        is_open = frozenset(canonical_form(CATALOG[x]) for x in fam) in open_keys
        if t_hit and n_hit:
            both.append(fam)
        if is_open:
            opened.append(fam)
            if t_hit or n_hit:
                both.append(fam)
            expected = (Verdict.OPEN, None, None)
        elif t_hit:
            expected = (Verdict.TAME, t_hit[1], t_hit[0])
        elif n_hit:
            expected = (Verdict.NOT_TAME, n_hit[1], n_hit[0])
        else:
            neither.append(fam)
            continue
        c = classify(family(fam))
        witness = tuple(c.witness.names()) if c.witness is not None else None
        if (c.verdict, witness, c.rule_id) != expected:
            mismatches.append(fam)
        counts[c.verdict] += 1
        rows.append(SurveyRow(fam, c.verdict, witness, c.rule_id, c.theorem))
    return SurveyReport(rows, counts, both, neither, opened, mismatches)


def check_survey(report: SurveyReport) -> None:
    """Raise with a counterexample dump if the survey is inconsistent."""
    if report.both:
        raise ConsistencyError("families match both a tame and a non-tame witness", counterexample=report.both)
    if report.neither:
        raise ConsistencyError("families match no witness", counterexample=report.neither)
    if report.mismatches:
        raise ConsistencyError("classify disagrees with the containment matrix", counterexample=report.mismatches)
    if len(report.open_families) != 2:
        raise ConsistencyError("expected exactly two open families", counterexample=report.open_families)
