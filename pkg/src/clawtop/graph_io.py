from __future__ import annotations

from pathlib import Path

import networkx as nx

from .errors import InputError
from .families import from_networkx, to_networkx
from .graph import Graph


GRAPH_FORMATS = ("edgelist", "graph6")

_GRAPH6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    """First line "n m", then m lines "u v" with 0 <= u < v < n."""

    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InputError("edge list is empty")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError as e:
        raise InputError(f"bad edge list header {lines[0]!r}") from e
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"edge list declares {m} edges but has {len(body)}")
    edges: set[tuple[int, int]] = set()
    for ln in body:
        try:
            u, v = (int(x) for x in ln.split())
        except ValueError as e:
            raise InputError(f"bad edge line {ln!r}") from e
        if not 0 <= u < v < n:
            raise InputError(f"edge line {ln!r} must satisfy 0 <= u < v < {n}")
        if (u, v) in edges:
            raise InputError(f"edge {u} {v} is listed twice")
        edges.add((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER) :]
    if not s:
        raise InputError("graph6 string is empty")
    try:
        h = nx.from_graph6_bytes(s.encode("ascii"))
    except (ValueError, nx.NetworkXError, UnicodeEncodeError) as e:
        raise InputError(f"bad graph6 string: {e}") from e
    return from_networkx(h)


def format_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip() + "\n"


def detect_format(text: str) -> str:
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        return "edgelist"
    return "graph6"


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    fmt = fmt or detect_format(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise InputError(f"unknown graph format {fmt!r}")


def format_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return format_edge_list(g)
    if fmt == "graph6":
        return format_graph6(g)
    raise InputError(f"unknown graph format {fmt!r}")


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"cannot read graph file {path}: {e}") from e
    return parse_graph(text, fmt)


def write_graph(g: Graph, path: str | Path, fmt: str = "edgelist") -> None:
    Path(path).write_text(format_graph(g, fmt), encoding="utf-8")
