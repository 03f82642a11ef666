"""Read and write graphs as edge-list or DIMACS text.

Edge list (0-indexed, '#' comments):

    # optional comment
    n m
    u v          one line per edge

DIMACS (1-indexed, 'c' comments):

    c optional comment
    p edge n m
    e u v

Readers collapse duplicate edges, reject self-loops and out-of-range ids
with file:line positions, and require exactly m edge lines.  Writers emit
canonical sorted output so write -> read -> write is byte-stable.
"""

from __future__ import annotations

import os
from typing import Optional

from .errors import GraphFormatError, VertexRangeError
from .graph import Graph


def _parse_int(tok: str, what: str, path, line_no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"bad {what} {tok!r}", path=path, line=line_no) from None


def _add_edge(rows: list[int], n: int, u: int, v: int, path, line_no: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise VertexRangeError(
            f"vertex out of range 0..{n - 1} in edge ({u},{v})", path=path, line=line_no
        )
    if u == v:
        raise GraphFormatError(f"self-loop at vertex {u}", path=path, line=line_no)
    rows[u] |= 1 << v
    rows[v] |= 1 << u


def parse_edge_list(text: str, path: Optional[str] = None) -> Graph:
    """Parse edge-list text; `path` only labels error messages."""
    header: Optional[tuple[int, int]] = None
    rows: list[int] = []
    n = 0
    seen_edges = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if header is None:
            if len(toks) != 2:
                raise GraphFormatError(
                    f"header must be 'n m', got {raw.strip()!r}", path=path, line=line_no
                )
            n = _parse_int(toks[0], "vertex count", path, line_no)
            m = _parse_int(toks[1], "edge count", path, line_no)
            if n < 0 or m < 0:
                raise GraphFormatError(
                    f"negative count in header ({n} {m})", path=path, line=line_no
                )
            header = (n, m)
            rows = [0] * n
            continue
        if len(toks) != 2:
            raise GraphFormatError(
                f"edge line must be 'u v', got {raw.strip()!r}", path=path, line=line_no
            )
        u = _parse_int(toks[0], "vertex id", path, line_no)
        v = _parse_int(toks[1], "vertex id", path, line_no)
        _add_edge(rows, n, u, v, path, line_no)
        seen_edges += 1
    if header is None:
        raise GraphFormatError("empty input, expected 'n m' header", path=path)
    if seen_edges != header[1]:
        raise GraphFormatError(
            f"header declared {header[1]} edges but file has {seen_edges}", path=path
        )
    return Graph(n, tuple(rows))


def format_edge_list(g: Graph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        for chunk in comment.splitlines():
            lines.append(f"# {chunk}")
    edges = g.edges()
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str, path: Optional[str] = None) -> Graph:
    """Parse DIMACS 'p edge' text; vertex ids are shifted to 0-indexed."""
    header: Optional[tuple[int, int]] = None
    rows: list[int] = []
    n = 0
    seen_edges = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        toks = line.split()
        if toks[0] == "p":
            if header is not None:
                raise GraphFormatError("duplicate problem line", path=path, line=line_no)
            if len(toks) != 4 or toks[1] != "edge":
                raise GraphFormatError(
                    f"problem line must be 'p edge n m', got {raw.strip()!r}",
                    path=path,
                    line=line_no,
                )
            n = _parse_int(toks[2], "vertex count", path, line_no)
            m = _parse_int(toks[3], "edge count", path, line_no)
            if n < 0 or m < 0:
                raise GraphFormatError(
                    f"negative count in problem line ({n} {m})", path=path, line=line_no
                )
            header = (n, m)
            rows = [0] * n
        elif toks[0] == "e":
            if header is None:
                raise GraphFormatError(
                    "edge line before problem line", path=path, line=line_no
                )
            if len(toks) != 3:
                raise GraphFormatError(
                    f"edge line must be 'e u v', got {raw.strip()!r}",
                    path=path,
                    line=line_no,
                )
            u = _parse_int(toks[1], "vertex id", path, line_no) - 1
            v = _parse_int(toks[2], "vertex id", path, line_no) - 1
            _add_edge(rows, n, u, v, path, line_no)
            seen_edges += 1
        else:
            raise GraphFormatError(
                f"unknown line type {toks[0]!r}", path=path, line=line_no
            )
    if header is None:
        raise GraphFormatError("missing 'p edge n m' line", path=path)
    if seen_edges != header[1]:
        raise GraphFormatError(
            f"problem line declared {header[1]} edges but file has {seen_edges}",
            path=path,
        )
    return Graph(n, tuple(rows))


def format_dimacs(g: Graph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        for chunk in comment.splitlines():
            lines.append(f"c {chunk}")
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def sniff_format(text: str) -> str:
    """Guess 'dimacs' or 'edgelist' from the first meaningful line."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line[0] in "pce" and (len(line) == 1 or line[1] in " \t"):
            return "dimacs"
        if line.startswith("#"):
            return "edgelist"
        return "edgelist"
    return "edgelist"


def load_graph(path: str, fmt: str = "auto") -> Graph:
    if not os.path.exists(path):
        raise GraphFormatError("no such file", path=path)
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "dimacs":
        return parse_dimacs(text, path=path)
    if fmt == "edgelist":
        return parse_edge_list(text, path=path)
    raise GraphFormatError(f"unknown format {fmt!r}", path=path)


def save_graph(g: Graph, path: str, fmt: str = "edgelist", comment=None) -> None:
    if fmt == "dimacs":
        text = format_dimacs(g, comment=comment)
    elif fmt == "edgelist":
        text = format_edge_list(g, comment=comment)
    else:
        raise GraphFormatError(f"unknown format {fmt!r}", path=path)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
