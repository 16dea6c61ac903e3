from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any
import math
import random

import networkx as nx

from .analysis import Measurement, measure_graph
from .bounds import BoundKind, bound_value, claw_free_inequality_bound
from .collapse import can_fold, fold_collapse
from .complex import cone_apex, independence_complex, induced_subcomplex
from .config import RunConfig
from .connectivity import CONTRACTIBLE, Connectivity, conn_value, meets
from .errors import InputError, VerificationError
from .families import circular_graph, interval_graph, random_graph, to_networkx
from .fundamental_group import Pi1Status
from .graph import (
    Graph,
    VertexSet,
    check_complete_outer_neighborhood,
    closed_union,
    find_induced_claw,
    induced_subgraph,
    is_claw_free,
    is_complete,
    max_degree,
    neighborhood,
    remove_vertices,
)
from .homology import (
    HomologyProfile,
    boundary_matrices,
    check_boundary_squares,
    direct_sum,
    field_betti_numbers,
    reduced_homology,
)
from .smith import (
    determinant,
    elementary_divisors,
    is_divisibility_chain,
    matmul,
    rank_over_field,
    smith_normal_form,
)
from .time_utils import Stopwatch


_DEFAULT = RunConfig()

# characteristics for the universal-coefficient cross-check; 0 is Q
FIELD_CHARACTERISTICS = (0, 2, 3)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
ERROR = "error"


@dataclass(frozen=True)
class VerificationRecord:
    """One check over one graph.

    For connectivity checks a pass means ``measured`` meets ``claimed``;
    ``claimed`` of None stands for "every level" and prints as unbounded.
    """

    graph_id: str
    check: str
    kind: str
    n: int
    d: int
    claimed: int | None
    measured: Connectivity | None
    status: str
    pi1: str = "n/a"
    ms: int = 0
    detail: dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def sort_key(self) -> tuple[str, str]:
        return (self.graph_id, self.check)

    def to_json(self, include_ms: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "graph_id": self.graph_id,
            "check": self.check,
            "kind": self.kind,
            "n": self.n,
            "d": self.d,
            "claimed": "unbounded" if self.claimed is None else self.claimed,
            "measured": self.measured,
            "status": self.status,
            "pass": self.passed,
            "pi1": self.pi1,
            "detail": self.detail,
        }
        if include_ms:
            out["ms"] = self.ms
        return out


def _record(
    graph_id: str,
    check: str,
    kind: str,
    g: Graph | None,
    claimed: int | None,
    measured: Connectivity | None,
    passed: bool,
    sw: Stopwatch,
    pi1: str = "n/a",
    **detail: Any,
) -> VerificationRecord:
    return VerificationRecord(
        graph_id=graph_id,
        check=check,
        kind=kind,
        n=g.n if g is not None else 0,
        d=max_degree(g) if g is not None else 0,
        claimed=claimed,
        measured=measured,
        status=PASS if passed else FAIL,
        pi1=pi1,
        ms=sw.elapsed_ms(),
        detail=detail,
    )


def _measure(g: Graph, cfg: RunConfig, want_pi1: bool = False) -> Measurement:
    return measure_graph(g, cfg, want_pi1)


def _profile(g: Graph, cfg: RunConfig) -> HomologyProfile:
    return _measure(g, cfg).profile


def _require_claw_free(g: Graph, what: str) -> None:
    if not is_claw_free(g):
        raise InputError(f"{what} needs a claw-free graph; found claw {find_induced_claw(g)}")


# ---- bounds ----------------------------------------------------------------


def verify_bound(
    g: Graph,
    kind: BoundKind,
    cfg: RunConfig = _DEFAULT,
    graph_id: str = "graph",
) -> VerificationRecord:
    """Measured connectivity of Ind(G) against the claimed bound."""

    sw = Stopwatch()
    if g.n == 0:
        raise InputError("bounds are stated for graphs with at least one vertex")
    if kind.tag == "claw_free":
        _require_claw_free(g, "the claw_free bound")
    check = f"bound:{kind.tag}"

    if kind.tag in {"general", "claw_free"} and max_degree(g) == 0:
        # Ind of an edgeless graph is a full simplex
        return _record(
            graph_id, check, kind.tag, g, None, CONTRACTIBLE, True, sw,
            pi1=Pi1Status.TRIVIAL.value, reason="edgeless",
        )

    claimed = bound_value(kind)
    m = _measure(g, cfg, want_pi1=True)
    return _record(
        graph_id, check, kind.tag, g, claimed, m.conn, meets(m.conn, claimed), sw,
        pi1=m.pi1.value,
        bound=kind.describe(),
        slack=_slack(m.conn, claimed),
        certified_topological=m.report.certified_topological,
        pi1_unverified=m.report.pi1_unverified,
    )


def _slack(measured: Connectivity, claimed: int) -> int | None:
    value = conn_value(measured)
    if math.isinf(value):
        return None
    return int(value) - claimed


# ---- Lemma: closed neighbourhood plus common neighbours ---------------------


@dataclass(frozen=True)
class InequalityResult:
    size: int
    bound: int
    passed: bool


def check_claw_free_inequality(g: Graph, u: int, v1: int, v2: int) -> InequalityResult:
    """|closed N(u) + (N(v1) & N(v2))| <= floor((3d+2)/2) for nonadjacent v1, v2 in N(u)."""

    _require_claw_free(g, "the neighbourhood inequality")
    nu = neighborhood(g, u)
    if v1 == v2 or v1 not in nu or v2 not in nu:
        raise InputError(f"{v1} and {v2} must be distinct neighbours of {u}")
    if g.has_edge(v1, v2):
        raise InputError(f"{v1} and {v2} are adjacent")
    covered = neighborhood(g, u, closed=True) | (neighborhood(g, v1) & neighborhood(g, v2))
    bound = claw_free_inequality_bound(max_degree(g))
    return InequalityResult(size=len(covered), bound=bound, passed=len(covered) <= bound)


def check_claw_free_inequalities(g: Graph, graph_id: str = "graph") -> VerificationRecord:
    """Every valid (u, v1, v2) triple of a claw-free graph; one record per graph.

    Here ``claimed`` is the upper bound and ``measured`` the largest set seen.
    """

    sw = Stopwatch()
    bound = claw_free_inequality_bound(max_degree(g))
    triples = 0
    largest = 0
    violations: list[list[int]] = []
    for u in g.vertices:
        for v1, v2 in combinations(sorted(neighborhood(g, u)), 2):
            if g.has_edge(v1, v2):
                continue
            res = check_claw_free_inequality(g, u, v1, v2)
            triples += 1
            largest = max(largest, res.size)
            if not res.passed:
                violations.append([u, v1, v2, res.size])
    return _record(
        graph_id, "neighborhood-inequality", "inequality", g, bound, largest,
        not violations, sw, triples=triples, violations=violations[:10],
    )


# ---- main theorem ----------------------------------------------------------


@dataclass(frozen=True)
class Condition:
    """Ind(G minus ``removed``) must be (n - ``offset``)-connected."""

    family: str
    witness: tuple[int, ...]
    removed: VertexSet
    offset: int


@dataclass(frozen=True)
class DecompositionPlan:
    u: int
    family_a: tuple[int, ...] = ()
    family_b: tuple[tuple[int, int], ...] = ()
    family_c: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = ()
    family_d: tuple[int, ...] = ()
    conditions: tuple[Condition, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.conditions


def decompose_main_theorem(g: Graph, u: int) -> DecompositionPlan:
    """Condition subgraphs of the claw-free connectivity theorem at vertex u.

    family_d (v in N(u) whose closed neighbourhood misses part of u's) is the
    hypothesis the proof uses for intersections of the pair complexes.
    """

    g._check_vertex(u)
    _require_claw_free(g, "the main theorem")
    closed_u = neighborhood(g, u, closed=True)
    nbrs = sorted(neighborhood(g, u))

    family_a: list[int] = []
    family_d: list[int] = []
    conditions: list[Condition] = []
    for v in nbrs:
        closed_v = neighborhood(g, v, closed=True)
        if closed_v >= closed_u:
            family_a.append(v)
            conditions.append(Condition("a", (v,), closed_v, 1))
        else:
            family_d.append(v)

    family_b: list[tuple[int, int]] = []
    family_c: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for v1, v2 in combinations(nbrs, 2):
        if g.has_edge(v1, v2):
            continue
        family_b.append((v1, v2))
        common = neighborhood(g, v1) & neighborhood(g, v2)
        conditions.append(Condition("b", (v1, v2), closed_u | common, 1))
        outer = (neighborhood(g, v1) | neighborhood(g, v2)) - closed_u
        for w1, w2 in combinations(sorted(outer), 2):
            if g.has_edge(w1, w2):
                continue
            family_c.append(((v1, v2), (w1, w2)))
            conditions.append(
                Condition("c", (v1, v2, w1, w2), closed_u | closed_union(g, (w1, w2)), 2)
            )

    for v in family_d:
        conditions.append(
            Condition("d", (v,), closed_u | neighborhood(g, v, closed=True), 2)
        )

    return DecompositionPlan(
        u=u,
        family_a=tuple(family_a),
        family_b=tuple(family_b),
        family_c=tuple(family_c),
        family_d=tuple(family_d),
        conditions=tuple(conditions),
    )


def _condition_levels(
    g: Graph, plan: DecompositionPlan, cfg: RunConfig
) -> list[tuple[Condition, Connectivity]]:
    return [(c, _measure(remove_vertices(g, c.removed), cfg).conn) for c in plan.conditions]


def max_certifiable_n(
    g: Graph, u: int, cfg: RunConfig = _DEFAULT, plan: DecompositionPlan | None = None
) -> int | None:
    """Largest n whose hypotheses all hold at u; None when every n qualifies."""

    if plan is None:
        plan = decompose_main_theorem(g, u)
    levels = [conn_value(conn) + c.offset for c, conn in _condition_levels(g, plan, cfg)]
    if not levels or math.isinf(min(levels)):
        return None
    return int(min(levels))


def certify_main_theorem(
    g: Graph,
    u: int,
    n: int | None,
    cfg: RunConfig = _DEFAULT,
    graph_id: str = "graph",
) -> VerificationRecord:
    """Check the hypotheses at level n, then measure Ind(G) by brute force.

    A record only fails when every hypothesis holds and Ind(G) is not
    homologically n-connected. ``n`` of None asks for every level at once.
    """

    sw = Stopwatch()
    plan = decompose_main_theorem(g, u)
    required = math.inf if n is None else n
    levels = _condition_levels(g, plan, cfg)
    unmet = [
        {"family": c.family, "witness": list(c.witness), "conn": conn}
        for c, conn in levels
        if not meets(conn, required - c.offset)
    ]
    hypotheses = not unmet
    m = _measure(g, cfg)
    passed = (not hypotheses) or meets(m.conn, required)
    return _record(
        graph_id, f"decomposition[u={u}]", "main_theorem", g, n, m.conn, passed, sw,
        pi1=m.pi1.value,
        u=u,
        hypotheses_hold=hypotheses,
        families={
            "a": len(plan.family_a),
            "b": len(plan.family_b),
            "c": len(plan.family_c),
            "d": len(plan.family_d),
        },
        unmet=unmet[:5],
    )


def check_main_theorem_cover(
    g: Graph, u: int, cfg: RunConfig = _DEFAULT, graph_id: str = "graph"
) -> VerificationRecord:
    """Ind(G) is the union of the a-type and pair subcomplexes at u.

    Each piece is Ind(G minus (N(u) minus its kept vertices)), compared as
    face sets inside Ind(G).
    """

    sw = Stopwatch()
    plan = decompose_main_theorem(g, u)
    nu = neighborhood(g, u)
    cx = independence_complex(g, max_vertices=cfg.cap_vertices, max_faces=cfg.cap_faces)
    pieces = [frozenset(nu - {v}) for v in plan.family_a] + [
        frozenset(nu - {v1, v2}) for v1, v2 in plan.family_b
    ]
    if not nu:
        uncovered = 0
    else:
        uncovered = sum(
            1 for f in cx.all_faces() if not any(drop.isdisjoint(f) for drop in pieces)
        )
    # no face meets N(u) in three vertices of a claw-free graph
    wide = sum(1 for f in cx.all_faces() if len(nu.intersection(f)) > 2)
    return _record(
        graph_id, f"decomposition-cover[u={u}]", "cover", g, None, None,
        uncovered == 0 and wide == 0, sw,
        u=u, pieces=len(pieces), uncovered=uncovered,
    )


# ---- wedge decomposition and the families ----------------------------------


def _wedge_of_suspensions(g: Graph, vertices: list[int], cfg: RunConfig) -> HomologyProfile:
    return direct_sum(
        _profile(remove_vertices(g, neighborhood(g, v, closed=True)), cfg).suspend()
        for v in vertices
    )


def verify_wedge_decomposition(
    g: Graph, u: int, cfg: RunConfig = _DEFAULT, graph_id: str = "graph"
) -> VerificationRecord:
    """Ind(G) against the wedge of suspensions of Ind(G minus closed N(v)), v in N(u)."""

    sw = Stopwatch()
    nbrs = sorted(neighborhood(g, u))
    if not nbrs:
        raise InputError(f"vertex {u} has no neighbours")
    if not is_complete(g, nbrs):
        raise InputError(f"the neighbourhood of {u} is not complete")
    lhs = _profile(g, cfg)
    rhs = _wedge_of_suspensions(g, nbrs, cfg)
    return _record(
        graph_id, f"wedge[u={u}]", "wedge", g, None, None, lhs == rhs, sw,
        u=u, lhs=lhs.to_json(), rhs=rhs.to_json(),
    )


def simplicial_vertices(g: Graph) -> list[int]:
    """Vertices with a nonempty complete neighbourhood."""

    return [u for u in g.vertices if g.adj[u] and is_complete(g, g.adj[u])]


def _interval_profile(m: int, k: int, cfg: RunConfig) -> HomologyProfile:
    if m <= 0:
        return HomologyProfile.empty_space()
    return _profile(interval_graph(m, k), cfg)


def verify_L_recursion(n: int, k: int, cfg: RunConfig = _DEFAULT) -> VerificationRecord:
    """Ind(L_n^k) against the wedge over 1 <= i < min(k, n) of susp Ind(L_{n-k-i}^k)."""

    if n < 1 or k < 2:
        raise InputError(f"the interval recursion needs n >= 1 and k >= 2, got n={n}, k={k}")
    sw = Stopwatch()
    g = interval_graph(n, k)
    lhs = _profile(g, cfg)
    rhs = direct_sum(
        _interval_profile(n - k - i, k, cfg).suspend() for i in range(1, min(k, n))
    )
    return _record(
        f"L({n},{k})", "L-recursion", "recursion", g, None, None, lhs == rhs, sw,
        lhs=lhs.to_json(), rhs=rhs.to_json(),
    )


def verify_L_bound(n: int, k: int, cfg: RunConfig = _DEFAULT) -> VerificationRecord:
    return verify_bound(
        interval_graph(n, k), BoundKind("l_family", n=n, k=k), cfg, graph_id=f"L({n},{k})"
    )


def verify_C_theorem(n: int, k: int, cfg: RunConfig = _DEFAULT) -> VerificationRecord:
    """Ind(C_n^k) against c_{n,k}.

    Removing the closed neighbourhood of u = 3k-2 leaves the interval graph
    L_{n-(2k-1)}^k; the record checks that identification as well.
    """

    kind = BoundKind("c_family", n=n, k=k)
    sw = Stopwatch()
    g = circular_graph(n, k)
    claimed = bound_value(kind)
    m = _measure(g, cfg, want_pi1=True)

    u = (3 * k - 2) % n
    rest = remove_vertices(g, neighborhood(g, u, closed=True))
    remaining = n - (2 * k - 1)
    # the leftover arc may wrap past vertex 0, so compare up to isomorphism
    identified = nx.is_isomorphic(
        to_networkx(rest), to_networkx(interval_graph(max(remaining, 0), k))
    )
    return _record(
        f"C({n},{k})", "C-theorem", "c_family", g, claimed, m.conn,
        meets(m.conn, claimed) and identified, sw,
        pi1=m.pi1.value,
        slack=_slack(m.conn, claimed),
        u=u,
        interval_identified=identified,
        pi1_unverified=m.report.pi1_unverified,
    )


# ---- the two small lemmas ---------------------------------------------------


def check_degree_one_lemma(
    g: Graph, u: int, cfg: RunConfig = _DEFAULT, graph_id: str = "graph"
) -> VerificationRecord:
    """N(u) = {v}: Ind(G) is one level more connected than Ind(G minus closed N(v))."""

    sw = Stopwatch()
    nbrs = sorted(neighborhood(g, u))
    if len(nbrs) != 1:
        raise InputError(f"vertex {u} has degree {len(nbrs)}, expected 1")
    (v,) = nbrs
    below = _measure(remove_vertices(g, neighborhood(g, v, closed=True)), cfg).conn
    claimed = _level(conn_value(below) + 1)
    m = _measure(g, cfg)
    return _record(
        graph_id, f"lemma-degree-one[u={u}]", "lemma", g, claimed, m.conn,
        meets(m.conn, conn_value(below) + 1), sw,
        u=u, v=v,
    )


def two_neighbor_hypotheses(g: Graph, u: int) -> bool:
    nbrs = sorted(neighborhood(g, u))
    if len(nbrs) != 2 or g.has_edge(*nbrs):
        return False
    return all(is_complete(g, neighborhood(g, v) - {u}) for v in nbrs)


def check_two_neighbor_lemma(
    g: Graph, u: int, cfg: RunConfig = _DEFAULT, graph_id: str = "graph"
) -> VerificationRecord:
    """N(u) = {v1, v2} nonadjacent with complete outer neighbourhoods."""

    sw = Stopwatch()
    if not two_neighbor_hypotheses(g, u):
        raise InputError(f"vertex {u} does not meet the two-neighbour hypotheses")
    v1, v2 = sorted(neighborhood(g, u))
    closed_u = neighborhood(g, u, closed=True)
    common = neighborhood(g, v1) & neighborhood(g, v2)
    levels = [conn_value(_measure(remove_vertices(g, closed_u | common), cfg).conn) + 1]
    outer = (neighborhood(g, v1) | neighborhood(g, v2)) - {u}
    for w1, w2 in combinations(sorted(outer), 2):
        if g.has_edge(w1, w2):
            continue
        removed = closed_union(g, (w1, w2)) | {u}
        levels.append(conn_value(_measure(remove_vertices(g, removed), cfg).conn) + 2)
    required = min(levels)
    m = _measure(g, cfg)
    return _record(
        graph_id, f"lemma-two-neighbor[u={u}]", "lemma", g, _level(required), m.conn,
        meets(m.conn, required), sw,
        u=u, v1=v1, v2=v2, conditions=len(levels),
    )


def _level(value: float) -> int | None:
    return None if math.isinf(value) else int(value)


# ---- basic properties --------------------------------------------------------


def check_basic_properties(
    g: Graph, cfg: RunConfig = _DEFAULT, graph_id: str = "graph"
) -> VerificationRecord:
    """The four elementary facts about independence complexes, on one graph.

    1. Ind(G)[U] = Ind(G[U]) for U = V minus a vertex and V minus a closed neighbourhood.
    2. Ind(G minus N(u)) is a cone with apex u.
    3. Every face extends by some vertex of closed N(u), or already meets it.
    4. A two-vertex component {u, v} suspends Ind(G minus {u, v}).
    """

    sw = Stopwatch()
    cx = independence_complex(g, max_vertices=cfg.cap_vertices, max_faces=cfg.cap_faces)
    faces = cx.all_faces()

    restriction = True
    for x in g.vertices:
        for drop in ({x}, neighborhood(g, x, closed=True)):
            keep = [v for v in g.vertices if v not in drop]
            sub = independence_complex(
                induced_subgraph(g, keep),
                max_vertices=cfg.cap_vertices,
                max_faces=cfg.cap_faces,
            )
            if induced_subcomplex(cx, keep, relabel=True) != sub:
                restriction = False

    cones = True
    for u in g.vertices:
        keep = [v for v in g.vertices if v not in g.adj[u]]
        apex = keep.index(u)
        sub = independence_complex(
            induced_subgraph(g, keep), max_vertices=cfg.cap_vertices, max_faces=cfg.cap_faces
        )
        if cone_apex(sub) is None or any(apex not in f for f in sub.facets()):
            cones = False

    extension = all(
        any(g.is_independent(set(f) | {v}) for v in neighborhood(g, u, closed=True))
        for u in g.vertices
        for f in faces
    )

    suspension_ok = True
    components = 0
    for u, v in g.edges():
        if g.adj[u] == {v} and g.adj[v] == {u}:
            components += 1
            rest = remove_vertices(g, (u, v))
            if _profile(g, cfg) != _profile(rest, cfg).suspend():
                suspension_ok = False

    passed = restriction and cones and extension and suspension_ok
    return _record(
        graph_id, "basic-properties", "properties", g, None, None, passed, sw,
        restriction=restriction,
        cone=cones,
        extension=extension,
        suspension=suspension_ok,
        k2_components=components,
    )


def check_outer_neighborhoods(g: Graph, graph_id: str = "graph") -> VerificationRecord:
    """In a claw-free graph every G[N(v) minus closed N(u)] is complete, v in N(u)."""

    sw = Stopwatch()
    _require_claw_free(g, "the outer neighbourhood check")
    pairs = [(u, v) for u in g.vertices for v in sorted(g.adj[u])]
    bad = [[u, v] for u, v in pairs if not check_complete_outer_neighborhood(g, u, v)]
    return _record(
        graph_id, "outer-neighborhoods", "properties", g, None, None, not bad, sw,
        pairs=len(pairs), violations=bad[:10],
    )


def check_claw_oracle(g: Graph, graph_id: str = "graph") -> VerificationRecord:
    """The neighbourhood-complement test agrees with the brute-force claw scan."""

    sw = Stopwatch()
    fast = is_claw_free(g)
    witness = find_induced_claw(g)
    return _record(
        graph_id, "claw-oracle", "properties", g, None, None, fast == (witness is None), sw,
        claw_free=fast, witness=list(witness) if witness else None,
    )


def check_field_coefficients(
    g: Graph, cfg: RunConfig = _DEFAULT, graph_id: str = "graph"
) -> VerificationRecord:
    """Boundaries of Ind(G) square to zero, and its integral homology predicts the
    Betti numbers over Q, GF(2) and GF(3) computed from the uncollapsed complex.
    """

    sw = Stopwatch()
    cx = independence_complex(g, max_vertices=cfg.cap_vertices, max_faces=cfg.cap_faces)
    try:
        check_boundary_squares(boundary_matrices(cx, max_faces=cfg.cap_faces))
        squares_ok = True
    except VerificationError:
        squares_ok = False

    betti: dict[str, list[int]] = {}
    mismatched: list[int] = []
    if squares_ok:
        profile = _profile(g, cfg)
        for p in FIELD_CHARACTERISTICS:
            predicted = profile.field_betti(p)
            betti[str(p)] = predicted
            if field_betti_numbers(cx, p, max_faces=cfg.cap_faces) != predicted:
                mismatched.append(p)
    return _record(
        graph_id, "field-betti", "properties", g, None, None,
        squares_ok and not mismatched, sw,
        boundary_squares=squares_ok, mismatched=mismatched, betti=betti,
    )


# ---- collapse and linear algebra kernels -------------------------------------


def check_random_fold(trial: int, cfg: RunConfig = _DEFAULT) -> VerificationRecord:
    """Apply one random fold; the emitted collapse must replay onto Ind(G minus w)."""

    sw = Stopwatch()
    rng = random.Random(cfg.seed * 1_000_003 + trial)
    while True:
        n = rng.randint(4, 9)
        g = random_graph(n, rng.uniform(0.2, 0.8), rng.randrange(2**31))
        folds = [(v, w) for v in g.vertices for w in g.vertices if can_fold(g, v, w)]
        if folds:
            break
    v, w = rng.choice(folds)
    cx = independence_complex(g, max_vertices=cfg.cap_vertices, max_faces=cfg.cap_faces)
    result = fold_collapse(g, v, w, cx=cx)
    assert result.sequence is not None
    replayed = result.sequence.replay(cx)
    target = independence_complex(
        result.graph, max_vertices=cfg.cap_vertices, max_faces=cfg.cap_faces
    )
    keep = [x for x in g.vertices if x != w]
    lands = all(w not in f for f in replayed.all_faces()) and (
        induced_subcomplex(replayed, keep, relabel=True) == target
    )
    before = reduced_homology(cx, max_faces=cfg.cap_faces)
    after = reduced_homology(target, max_faces=cfg.cap_faces)
    return _record(
        f"fold-{trial:04d}", "fold", "collapse", g, None, None,
        lands and before == after, sw,
        v=v, w=w, steps=len(result.sequence), replay_ok=lands,
        homology=after.to_json(),
    )


def check_random_matrix(trial: int, cfg: RunConfig = _DEFAULT) -> VerificationRecord:
    """Smith form of a random integer matrix against independent reductions."""

    sw = Stopwatch()
    rng = random.Random(cfg.seed * 1_000_033 + trial)
    rows, cols = rng.randint(1, 40), rng.randint(1, 40)
    density = rng.choice((0.15, 0.4, 1.0))
    matrix = [
        [rng.randint(-9, 9) if rng.random() < density else 0 for _ in range(cols)]
        for _ in range(rows)
    ]
    form = smith_normal_form(matrix)
    assert form.left is not None and form.right is not None
    product = matmul(matmul(form.left, matrix), form.right)
    diagonal_ok = product == [list(r) for r in form.diagonal] and all(
        product[i][j] == 0 for i in range(rows) for j in range(cols) if i != j
    )
    chain_ok = is_divisibility_chain(form.divisors)
    unimodular = abs(determinant(form.left)) == 1 and abs(determinant(form.right)) == 1
    columns = [{i: matrix[i][j] for i in range(rows) if matrix[i][j]} for j in range(cols)]
    sparse_rank, sparse_torsion = elementary_divisors(columns)
    sparse_ok = sparse_rank == form.rank and sparse_torsion == form.torsion
    rank_ok = rank_over_field(matrix, 0) == form.rank
    return _record(
        f"snf-{trial:04d}", "snf", "smith", None, None, None,
        diagonal_ok and chain_ok and unimodular and sparse_ok and rank_ok, sw,
        shape=[rows, cols],
        rank=form.rank,
        torsion=list(form.torsion),
        diagonal=diagonal_ok,
        chain=chain_ok,
        unimodular=unimodular,
        sparse_agrees=sparse_ok,
        rational_rank_agrees=rank_ok,
    )
