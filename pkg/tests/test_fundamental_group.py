from __future__ import annotations

from itertools import combinations

from clawtop.complex import SimplicialComplex, full_simplex, independence_complex
from clawtop.families import cycle_graph
from clawtop.fundamental_group import (
    Pi1Status,
    Presentation,
    connected_components,
    cyclic_reduce,
    edge_path_presentation,
    free_reduce,
    invert,
    pi1_status,
    simplify_presentation,
)

from .test_homology import projective_plane


def test_word_helpers() -> None:
    assert free_reduce([1, -1, 2]) == [2]
    assert free_reduce([1, 2, -2, -1]) == []
    assert cyclic_reduce([1, 2, -1]) == [2]
    assert invert([1, -2]) == [2, -1]


def test_components() -> None:
    two_edges = independence_complex(cycle_graph(4))
    assert connected_components(two_edges) == [[0, 2], [1, 3]]
    assert connected_components(SimplicialComplex.empty(0)) == []


def test_edge_path_presentation_of_a_circle() -> None:
    circle = SimplicialComplex.from_facets(3, [(0, 1), (1, 2), (0, 2)])
    pres = edge_path_presentation(circle, [0, 1, 2])
    assert pres.generators == {1}
    assert pres.relators == []


def test_simplification() -> None:
    killed = simplify_presentation(Presentation(generators={1, 2}, relators=[[1, 2], [2]]))
    assert killed.is_trivial

    # the torus relator has no generator that occurs once
    torus = simplify_presentation(Presentation(generators={1, 2}, relators=[[1, 2, -1, -2]]))
    assert torus.generators == {1, 2}

    capped = simplify_presentation(
        Presentation(generators={1, 2}, relators=[[1, 2], [2]]), max_steps=0
    )
    assert capped.generators == {1, 2}


def test_pi1_status() -> None:
    tetra_boundary = SimplicialComplex.from_facets(4, combinations(range(4), 3))
    assert pi1_status(tetra_boundary) == Pi1Status.TRIVIAL
    assert pi1_status(full_simplex(3)) == Pi1Status.TRIVIAL
    assert pi1_status(projective_plane()) == Pi1Status.NONTRIVIAL
    assert pi1_status(independence_complex(cycle_graph(6))) == Pi1Status.NONTRIVIAL
    assert pi1_status(SimplicialComplex.empty(0)) == Pi1Status.UNKNOWN
    assert pi1_status(independence_complex(cycle_graph(4))) == Pi1Status.UNKNOWN
