from __future__ import annotations

from hypothesis import given, settings
import pytest

from clawtop.collapse import (
    CollapseSequence,
    FoldRecord,
    can_fold,
    find_fold,
    find_free_face_collapses,
    fold_collapse,
    free_face_collapse,
    greedy_fold_reduce,
)
from clawtop.complex import SimplicialComplex, full_simplex, independence_complex, induced_subcomplex
from clawtop.errors import CollapseError, InputError
from clawtop.families import cycle_graph, path_graph
from clawtop.graph import Graph
from clawtop.homology import reduced_homology

from .strategies import graphs


def test_fold_on_a_path() -> None:
    g = path_graph(3)
    assert can_fold(g, 0, 2)
    assert not can_fold(g, 0, 1)
    assert find_fold(g) == (0, 2)

    result = fold_collapse(g, 0, 2)
    assert result.graph == path_graph(2)
    assert result.record == FoldRecord(kept=0, removed=2)
    assert result.sequence is not None
    assert result.sequence.steps == (((2,), (0, 2)),)
    assert result.sequence.replay(independence_complex(g)).facets() == [(0,), (1,)]


def test_fold_preconditions() -> None:
    with pytest.raises(InputError):
        fold_collapse(path_graph(3), 0, 1)
    with pytest.raises(InputError):
        fold_collapse(path_graph(3), 1, 1)
    with pytest.raises(InputError):
        fold_collapse(path_graph(3), 0, 9)


def test_greedy_fold_reduce() -> None:
    reduced, records = greedy_fold_reduce(path_graph(7))
    assert reduced == Graph.empty(1)
    assert len(records) == 6
    assert records[0] == FoldRecord(kept=0, removed=2)

    same, none = greedy_fold_reduce(cycle_graph(6))
    assert same == cycle_graph(6)
    assert none == []


def test_free_face_collapse() -> None:
    assert free_face_collapse(full_simplex(3)).f_vector() == [1]
    hollow = SimplicialComplex.from_facets(3, [(0, 1), (1, 2), (0, 2)])
    assert free_face_collapse(hollow) == hollow
    assert len(find_free_face_collapses(hollow)) == 0


def test_replay_rejects_a_face_that_is_not_free() -> None:
    bad = CollapseSequence(steps=(((0,), (0, 1)),))
    with pytest.raises(CollapseError):
        bad.replay(full_simplex(3))
    with pytest.raises(CollapseError):
        CollapseSequence(steps=(((0,), (1, 2)),)).replay(full_simplex(3))


def test_sequence_json() -> None:
    seq = find_free_face_collapses(full_simplex(3))
    assert CollapseSequence.from_json(seq.to_json()) == seq
    with pytest.raises(InputError):
        CollapseSequence.from_json([[[0]]])  # type: ignore[list-item]


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6))
def test_collapses_preserve_homology(g: Graph) -> None:
    cx = independence_complex(g)
    assert reduced_homology(free_face_collapse(cx)) == reduced_homology(cx)
    reduced, _ = greedy_fold_reduce(g)
    assert reduced_homology(independence_complex(reduced)) == reduced_homology(cx)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=6))
def test_fold_sequence_lands_on_the_smaller_complex(g: Graph) -> None:
    pair = find_fold(g)
    if pair is None:
        return
    v, w = pair
    cx = independence_complex(g)
    result = fold_collapse(g, v, w, cx=cx)
    assert result.sequence is not None
    keep = [x for x in g.vertices if x != w]
    assert result.sequence.replay(cx) == induced_subcomplex(cx, keep)
