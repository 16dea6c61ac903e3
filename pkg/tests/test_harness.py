from __future__ import annotations

from hypothesis import given, settings
import pytest

from clawtop.bounds import BoundKind
from clawtop.connectivity import CONTRACTIBLE
from clawtop.ensemble import exhaustive_graphs
from clawtop.errors import InputError
from clawtop.families import complete_graph, cycle_graph, path_graph, star_graph
from clawtop.graph import Graph
from clawtop.harness import (
    FAIL,
    PASS,
    VerificationRecord,
    certify_main_theorem,
    check_basic_properties,
    check_claw_free_inequalities,
    check_claw_free_inequality,
    check_claw_oracle,
    check_degree_one_lemma,
    check_field_coefficients,
    check_main_theorem_cover,
    check_outer_neighborhoods,
    check_random_fold,
    check_random_matrix,
    check_two_neighbor_lemma,
    decompose_main_theorem,
    max_certifiable_n,
    simplicial_vertices,
    two_neighbor_hypotheses,
    verify_bound,
    verify_C_theorem,
    verify_L_bound,
    verify_L_recursion,
    verify_wedge_decomposition,
)

from .strategies import claw_free_graphs, graphs


def test_verify_bound_on_the_hexagon() -> None:
    rec = verify_bound(cycle_graph(6), BoundKind.for_graph("claw_free", cycle_graph(6)))
    assert rec.status == PASS
    assert rec.claimed == 0
    assert rec.measured == 0
    assert rec.d == 2
    assert rec.detail["slack"] == 0
    assert rec.pi1 == "nontrivial"

    general = verify_bound(cycle_graph(6), BoundKind("general", n=6, d=2), graph_id="c6")
    assert general.passed
    assert general.graph_id == "c6"
    assert general.check == "bound:general"


def test_verify_bound_edge_cases() -> None:
    edgeless = verify_bound(Graph.empty(4), BoundKind("claw_free", n=4, d=0))
    assert edgeless.passed
    assert edgeless.claimed is None
    assert edgeless.measured == CONTRACTIBLE
    assert edgeless.to_json()["claimed"] == "unbounded"

    with pytest.raises(InputError):
        verify_bound(Graph.empty(0), BoundKind("general", n=1, d=0))
    with pytest.raises(InputError):
        verify_bound(star_graph(3), BoundKind.for_graph("claw_free", star_graph(3)))
    # the general bound holds for graphs with claws too
    assert verify_bound(star_graph(3), BoundKind.for_graph("general", star_graph(3))).passed


def test_record_json() -> None:
    rec = VerificationRecord(
        graph_id="g", check="c", kind="k", n=3, d=2, claimed=1, measured=0,
        status=FAIL, ms=12, detail={"x": 1},
    )
    data = rec.to_json()
    assert data["pass"] is False
    assert data["claimed"] == 1
    assert "ms" not in data
    assert rec.to_json(include_ms=True)["ms"] == 12
    assert rec.sort_key() == ("g", "c")


def test_claw_free_inequality() -> None:
    res = check_claw_free_inequality(cycle_graph(6), 0, 1, 5)
    assert (res.size, res.bound, res.passed) == (3, 4, True)
    with pytest.raises(InputError):
        check_claw_free_inequality(cycle_graph(6), 0, 1, 2)
    with pytest.raises(InputError):
        check_claw_free_inequality(complete_graph(3), 0, 1, 2)
    with pytest.raises(InputError):
        check_claw_free_inequality(star_graph(3), 0, 1, 2)

    rec = check_claw_free_inequalities(cycle_graph(6), graph_id="c6")
    assert rec.check == "neighborhood-inequality"
    assert rec.claimed == 4
    assert rec.measured == 3
    assert rec.detail["triples"] == 6
    assert rec.passed


@settings(max_examples=100, deadline=None)
@given(claw_free_graphs())
def test_claw_free_inequality_holds(g: Graph) -> None:
    assert check_claw_free_inequalities(g).passed


def test_decomposition_of_the_hexagon() -> None:
    plan = decompose_main_theorem(cycle_graph(6), 0)
    assert plan.family_a == ()
    assert plan.family_b == ((1, 5),)
    assert plan.family_c == (((1, 5), (2, 4)),)
    assert plan.family_d == (1, 5)
    assert [c.family for c in plan.conditions] == ["b", "c", "d", "d"]
    assert max_certifiable_n(cycle_graph(6), 0) == 0

    rec = certify_main_theorem(cycle_graph(6), 0, 0)
    assert rec.passed
    assert rec.detail["hypotheses_hold"] is True
    assert rec.check == "decomposition[u=0]"

    vacuous = certify_main_theorem(cycle_graph(6), 0, 1)
    assert vacuous.passed
    assert vacuous.detail["hypotheses_hold"] is False


def test_decomposition_of_a_complete_graph() -> None:
    plan = decompose_main_theorem(complete_graph(4), 0)
    assert plan.family_a == (1, 2, 3)
    assert plan.family_b == ()
    assert plan.family_d == ()
    # every condition deletes the whole graph
    assert max_certifiable_n(complete_graph(4), 0) == -1
    isolated = decompose_main_theorem(Graph.empty(3), 1)
    assert isolated.is_empty
    assert max_certifiable_n(Graph.empty(3), 1) is None
    assert certify_main_theorem(Graph.empty(3), 1, None).passed
    with pytest.raises(InputError):
        decompose_main_theorem(star_graph(3), 0)


@settings(max_examples=60, deadline=None)
@given(claw_free_graphs(max_n=6))
def test_main_theorem_holds_at_its_best_level(g: Graph) -> None:
    for u in g.vertices:
        n = max_certifiable_n(g, u)
        assert certify_main_theorem(g, u, n).passed
        assert check_main_theorem_cover(g, u).passed


def test_wedge_decomposition() -> None:
    rec = verify_wedge_decomposition(path_graph(3), 0)
    assert rec.passed
    assert rec.check == "wedge[u=0]"
    assert verify_wedge_decomposition(path_graph(6), 5).passed
    with pytest.raises(InputError):
        verify_wedge_decomposition(cycle_graph(6), 0)
    with pytest.raises(InputError):
        verify_wedge_decomposition(Graph.empty(2), 0)
    assert simplicial_vertices(path_graph(4)) == [0, 3]
    assert simplicial_vertices(cycle_graph(5)) == []


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=6))
def test_wedge_decomposition_at_every_simplicial_vertex(g: Graph) -> None:
    for u in simplicial_vertices(g):
        assert verify_wedge_decomposition(g, u).passed


def test_interval_family() -> None:
    for k in (2, 3, 4):
        for n in range(1, 13):
            assert verify_L_recursion(n, k).passed, (n, k)
            assert verify_L_bound(n, k).passed, (n, k)
    rec = verify_L_recursion(5, 2)
    assert rec.graph_id == "L(5,2)"
    assert rec.check == "L-recursion"
    with pytest.raises(InputError):
        verify_L_recursion(0, 2)
    with pytest.raises(InputError):
        verify_L_recursion(5, 1)


def test_circular_family() -> None:
    rec = verify_C_theorem(6, 2)
    assert rec.passed
    assert rec.claimed == 0
    assert rec.measured == 0
    assert rec.detail["interval_identified"] is True
    for n in range(6, 13):
        assert verify_C_theorem(n, 2).passed, n
    for n in range(12, 15):
        assert verify_C_theorem(n, 3).passed, n
    with pytest.raises(InputError):
        verify_C_theorem(11, 3)


def test_small_lemmas() -> None:
    rec = check_degree_one_lemma(path_graph(3), 0)
    assert rec.passed
    assert rec.claimed == -1
    assert check_degree_one_lemma(path_graph(4), 0).claimed is None
    with pytest.raises(InputError):
        check_degree_one_lemma(cycle_graph(5), 0)

    assert two_neighbor_hypotheses(cycle_graph(6), 0)
    assert two_neighbor_hypotheses(path_graph(3), 1)
    assert not two_neighbor_hypotheses(complete_graph(3), 0)
    two = check_two_neighbor_lemma(cycle_graph(6), 0)
    assert two.passed
    assert two.claimed == 0
    assert two.detail["conditions"] == 2
    with pytest.raises(InputError):
        check_two_neighbor_lemma(complete_graph(3), 0)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_small_lemmas_hold(g: Graph) -> None:
    for u in g.vertices:
        if g.degree(u) == 1:
            assert check_degree_one_lemma(g, u).passed
        if two_neighbor_hypotheses(g, u):
            assert check_two_neighbor_lemma(g, u).passed


def test_basic_properties() -> None:
    for g in (cycle_graph(6), path_graph(4), star_graph(3), Graph.empty(3)):
        assert check_basic_properties(g).passed
    with_k2 = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    rec = check_basic_properties(with_k2)
    assert rec.passed
    assert rec.detail["k2_components"] == 1


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_basic_properties_hold(g: Graph) -> None:
    assert check_basic_properties(g).passed


def test_field_coefficients() -> None:
    rec = check_field_coefficients(cycle_graph(6), graph_id="c6")
    assert rec.passed
    assert rec.check == "field-betti"
    # Ind(C6) is a wedge of two circles
    assert rec.detail["betti"] == {"0": [0, 2], "2": [0, 2], "3": [0, 2]}
    for e in exhaustive_graphs(5):
        small = check_field_coefficients(e.graph, graph_id=e.graph_id)
        assert small.passed, (e.graph_id, small.detail)
        assert small.detail["boundary_squares"] is True


def test_neighbourhood_checks() -> None:
    assert check_outer_neighborhoods(cycle_graph(6)).passed
    with pytest.raises(InputError):
        check_outer_neighborhoods(star_graph(3))
    oracle = check_claw_oracle(star_graph(3))
    assert oracle.passed
    assert oracle.detail["claw_free"] is False


def test_random_kernels() -> None:
    for trial in range(3):
        fold = check_random_fold(trial)
        assert fold.passed, fold.detail
        assert fold.graph_id == f"fold-{trial:04d}"
        snf = check_random_matrix(trial)
        assert snf.passed, snf.detail
        assert snf.graph_id == f"snf-{trial:04d}"
    assert check_random_fold(7).to_json() == check_random_fold(7).to_json()
