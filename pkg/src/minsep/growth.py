"""Separator counts along parameter sweeps of the extremal constructions."""

from __future__ import annotations

import csv
import io
import time
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from minsep.errors import ConsistencyError, GraphError
from minsep.generators import build, certified_bound, certified_family, verify_certificates
from minsep.separators import separator_masks

CSV_COLUMNS = ("family", "params", "n", "count", "is_lower_bound", "elapsed_ms")
CERTIFIED_FAMILIES = ("theta", "line-theta", "wall", "line-wall")
#: Exact enumeration is refused above this many vertices unless raised explicitly.
EXACT_MAX_N = 64


@dataclass(frozen=True)
class GrowthRow:
    family: str
    params: tuple
    n: int
    count: int
    is_lower_bound: bool
    elapsed_ms: float

    def csv_fields(self, timing: bool = True) -> list[str]:
        return [
            self.family,
            ";".join(map(str, self.params)),
            str(self.n),
            str(self.count),
            "true" if self.is_lower_bound else "false",
            f"{self.elapsed_ms:.3f}" if timing else "0",
        ]


def growth_row(family: str, params: Sequence, mode: str = "exact", max_n: int = EXACT_MAX_N) -> GrowthRow:
    start = time.perf_counter()
    params = tuple(params)
    if mode == "certify":
        if family not in CERTIFIED_FAMILIES:
            raise GraphError(f"family {family!r} has no certificate construction; use --mode exact")
        g, sets = certified_family(family, params)
        chk = verify_certificates(g, sets, family, params)
        bound = certified_bound(family, params)
        if not chk.ok or chk.claimed < bound:
            raise ConsistencyError(
                f"certificates for {family}{params} failed: {chk.verified}/{chk.claimed} verified", counterexample=chk
            )
        count, lower = bound, True
    elif mode == "exact":
        g = build(family, params)
        if g.n > max_n:
            hint = " (try --mode certify)" if family in CERTIFIED_FAMILIES else ""
            raise GraphError(f"{family}{params} has {g.n} vertices, above the exact ceiling {max_n}{hint}")
        count, lower = len(separator_masks(g)), False
    else:
        raise GraphError(f"unknown growth mode {mode!r}")
    elapsed = (time.perf_counter() - start) * 1000
    return GrowthRow(family, params, g.n, count, lower, elapsed)


def growth(family: str, param_list: Iterable[Sequence], mode: str = "exact", max_n: int = EXACT_MAX_N) -> list[GrowthRow]:
    return [growth_row(family, p, mode, max_n) for p in param_list]


def rows_to_csv(rows: Iterable[GrowthRow], timing: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(r.csv_fields(timing))
    return buf.getvalue()
