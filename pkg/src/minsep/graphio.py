"""Plain-text graph format.

::

    c optional comment lines
    p <n> <m>
    e <u> <v>      (m lines, 1-indexed endpoints)

The writer sorts edges, so equal graphs always serialize to the same bytes.
"""

from __future__ import annotations

from collections.abc import Iterable
from pathlib import Path

from minsep.errors import GraphError, GraphFormatError
from minsep.graph import Graph, from_edge_list


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" if c else "c" for c in comments]
    edges = g.edges()
    lines.append(f"p {g.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected an integer, got {token!r}") from None


def parse_graph(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if header is not None:
                raise GraphFormatError(f"line {lineno}: duplicate 'p' line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'p <n> <m>'")
            header = (_int(parts[1], lineno), _int(parts[2], lineno))
        elif tag == "e":
            if header is None:
                raise GraphFormatError(f"line {lineno}: edge before 'p' line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            n = header[0]
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {tag!r}")
    if header is None:
        raise GraphFormatError("missing 'p <n> <m>' line")
    n, m = header
    if n < 1:
        raise GraphFormatError("graph must have at least one vertex")
    if m != len(edges):
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} 'e' lines follow")
    try:
        return from_edge_list(n, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def read_graph(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text()
    except UnicodeDecodeError:
        raise GraphFormatError(f"{path}: not a text file") from None
    return parse_graph(text)


def write_graph(g: Graph, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_graph(g, comments))
