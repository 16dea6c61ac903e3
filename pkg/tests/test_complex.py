from __future__ import annotations

from hypothesis import given, settings
import pytest

from clawtop.complex import (
    SimplicialComplex,
    cone_apex,
    disjoint_union,
    full_simplex,
    independence_complex,
    independent_set_counts,
    induced_subcomplex,
    point,
    suspension,
    wedge,
)
from clawtop.errors import InputError, ResourceCapError
from clawtop.families import cycle_graph, star_graph
from clawtop.graph import Graph

from .strategies import graphs


def test_independence_complex_of_edgeless_graph_is_a_simplex() -> None:
    cx = independence_complex(Graph.empty(5))
    assert cx.f_vector() == [5, 10, 10, 5, 1]
    assert cx == full_simplex(5)
    assert cx.facets() == [(0, 1, 2, 3, 4)]
    assert cone_apex(cx) == 0


def test_independence_complex_of_claw() -> None:
    cx = independence_complex(star_graph(3))
    assert cx.f_vector() == [4, 3, 1]
    assert cx.facets() == [(0,), (1, 2, 3)]
    assert cone_apex(cx) is None
    assert (3, 1) in cx
    assert (0, 1) not in cx


def test_independence_complex_of_hexagon() -> None:
    cx = independence_complex(cycle_graph(6))
    assert cx.f_vector() == [6, 9, 2]
    assert cx.is_downward_closed()
    assert independence_complex(Graph.empty(0)).is_empty


def test_caps() -> None:
    with pytest.raises(ResourceCapError):
        independence_complex(Graph.empty(5), max_vertices=4)
    with pytest.raises(ResourceCapError):
        independence_complex(Graph.empty(5), max_faces=3)


def test_faces_are_validated() -> None:
    with pytest.raises(InputError):
        SimplicialComplex(universe=3, faces_by_dim=(frozenset({(0, 2)}),))
    with pytest.raises(InputError):
        SimplicialComplex.from_faces(2, [(0, 5)])
    assert not SimplicialComplex.from_faces(3, [(0, 1)], close=False).is_downward_closed()


def test_induced_subcomplex() -> None:
    cx = full_simplex(3)
    assert induced_subcomplex(cx, [0, 2], relabel=True) == full_simplex(2)
    kept = induced_subcomplex(cx, [0, 2])
    assert kept.universe == 3
    assert kept.facets() == [(0, 2)]
    with pytest.raises(InputError):
        induced_subcomplex(cx, [7])


def test_suspension_and_wedge() -> None:
    s0 = suspension(SimplicialComplex.empty(0))
    assert s0.f_vector() == [2]
    assert suspension(point()).f_vector() == [3, 2]

    w = wedge([full_simplex(2), full_simplex(2)])
    assert w.universe == 3
    assert w.facets() == [(0, 1), (0, 2)]
    assert wedge([]) == point()
    assert wedge([SimplicialComplex.empty(0), full_simplex(2)]) == full_simplex(2)
    with pytest.raises(InputError):
        wedge([full_simplex(2)], basepoints=[5])


def test_disjoint_union() -> None:
    two = disjoint_union(point(), point())
    assert two.universe == 2
    assert two.f_vector() == [2]


def test_json_and_canonical_key() -> None:
    cx = independence_complex(cycle_graph(5))
    again = SimplicialComplex.from_json(cx.to_json())
    assert again == cx
    assert again.canonical_key() == cx.canonical_key()
    assert cx.canonical_key() != independence_complex(cycle_graph(6)).canonical_key()
    with pytest.raises(InputError):
        SimplicialComplex.from_json({"facets": [[0]]})


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_counts_match_listed_faces(g: Graph) -> None:
    cx = independence_complex(g)
    assert independent_set_counts(g) == cx.f_vector()
    assert cx.is_downward_closed()
