from __future__ import annotations

from pathlib import Path
import tempfile

import pytest

from clawtop.errors import InputError
from clawtop.families import complete_graph, cycle_graph, path_graph
from clawtop.graph import Graph
from clawtop.graph_io import (
    detect_format,
    format_edge_list,
    format_graph6,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    read_graph,
    write_graph,
)


def test_parse_edge_list() -> None:
    text = "# a path\n3 2\n0 1\n1 2\n"
    assert parse_edge_list(text) == path_graph(3)
    assert format_edge_list(path_graph(3)) == "3 2\n0 1\n1 2\n"
    assert parse_edge_list("4 0\n") == Graph.empty(4)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "three 2\n",
        "3 2\n0 1\n",
        "3 1\n1 0\n",
        "3 1\n0 3\n",
        "3 1\n0 x\n",
        "2 2\n0 1\n0 1\n",
    ],
)
def test_bad_edge_lists(text: str) -> None:
    with pytest.raises(InputError):
        parse_edge_list(text)


def test_graph6() -> None:
    assert format_graph6(complete_graph(4)) == "C~\n"
    assert parse_graph6("C~") == complete_graph(4)
    assert parse_graph6(">>graph6<<C~\n") == complete_graph(4)
    g = cycle_graph(6)
    assert parse_graph6(format_graph6(g)) == g
    with pytest.raises(InputError):
        parse_graph6("")


def test_detect_format() -> None:
    assert detect_format("3 2\n0 1\n1 2\n") == "edgelist"
    assert detect_format("C~\n") == "graph6"
    assert parse_graph("C~") == complete_graph(4)


def test_read_and_write_files() -> None:
    with tempfile.TemporaryDirectory() as td:
        p = Path(td) / "c6.g6"
        write_graph(cycle_graph(6), p, "graph6")
        assert read_graph(p) == cycle_graph(6)

        q = Path(td) / "p5.txt"
        write_graph(path_graph(5), q)
        assert read_graph(q, "edgelist") == path_graph(5)

        with pytest.raises(InputError):
            read_graph(Path(td) / "missing.txt")

        raw = Path(td) / "raw.bin"
        raw.write_bytes(b"\xff\xfe\x00")
        with pytest.raises(InputError):
            read_graph(raw)
