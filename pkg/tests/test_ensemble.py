from __future__ import annotations

import pytest

from clawtop.bounds import BoundKind, bound_value
from clawtop.ensemble import (
    build_ensemble,
    exhaustive_graphs,
    graphs_up_to,
    line_graphs,
    random_claw_free_graphs,
    single_graph,
)
from clawtop.errors import InputError
from clawtop.families import cycle_graph
from clawtop.graph import is_claw_free


def test_isomorphism_classes_up_to_five_vertices() -> None:
    assert [len(level) for level in graphs_up_to(5)] == [1, 2, 4, 11, 34]
    assert graphs_up_to(0) == []


@pytest.mark.slow
def test_isomorphism_classes_on_six_and_seven_vertices() -> None:
    levels = graphs_up_to(7)
    assert len(levels[5]) == 156
    assert len(levels[6]) == 1044


def test_exhaustive_ids_and_claw_filter() -> None:
    graphs = exhaustive_graphs(4)
    assert len(graphs) == 18
    assert graphs[0].graph_id == "all1-0000"
    assert graphs[-1].graph_id == "all4-0010"
    assert {e.source for e in graphs} == {"exhaustive"}
    # the claw is the only 4-vertex graph with an induced claw
    assert sum(1 for e in graphs if is_claw_free(e.graph)) == 17


def test_random_claw_free_graphs_are_seeded() -> None:
    first = random_claw_free_graphs(5, seed=1)
    again = random_claw_free_graphs(5, seed=1)
    assert [e.graph for e in first] == [e.graph for e in again]
    assert [e.graph_id for e in first] == [f"rcf-{i:04d}" for i in range(5)]
    assert all(is_claw_free(e.graph) and e.graph.n in (8, 9) for e in first)


def test_random_claw_free_samples_have_nontrivial_bounds() -> None:
    samples = random_claw_free_graphs(40, seed=0)
    bounds = [
        bound_value(BoundKind.for_graph("claw_free", e.graph))
        for e in samples
        if e.graph.edge_count
    ]
    # most samples must claim something a nonempty complex does not meet for free
    assert sum(1 for b in bounds if b >= 0) >= 16
    assert all(0.2 <= float(e.source.split("p=")[1].rstrip(")")) <= 0.45 for e in samples)


def test_line_graphs() -> None:
    graphs = line_graphs(10, seed=3)
    assert len(graphs) == 10
    for e in graphs:
        assert is_claw_free(e.graph)
        assert 1 <= e.graph.n <= 12
        assert e.source == "line-graph"


def test_build_ensemble() -> None:
    quick = build_ensemble("quick", seed=2)
    ids = [e.graph_id for e in quick]
    assert len(ids) == len(set(ids))
    assert sum(1 for e in quick if e.source == "exhaustive") == 52
    assert sum(1 for i in ids if i.startswith("rcf-")) == 40
    assert [e.graph_id for e in build_ensemble("quick", seed=2)] == ids
    with pytest.raises(InputError):
        build_ensemble("huge")


def test_single_graph() -> None:
    (only,) = single_graph(cycle_graph(6), "c6")
    assert only.graph_id == "c6"
    assert only.source == "input"
