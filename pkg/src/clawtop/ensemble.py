from __future__ import annotations

from dataclasses import dataclass
import random

import networkx as nx

from .config import DEFAULT_RETRY_CAP
from .errors import InputError
from .families import line_graph, random_claw_free_graph, random_graph, to_networkx
from .graph import Graph


ENSEMBLES = ("default", "quick")

# dense samples have d large enough that the claw-free bound is -1
SPARSE_P_RANGE = (0.2, 0.45)


@dataclass(frozen=True)
class EnsembleGraph:
    graph_id: str
    graph: Graph
    source: str


@dataclass(frozen=True)
class EnsembleSpec:
    exhaustive_max_n: int
    random_samples: int
    random_n: tuple[int, int]
    p_range: tuple[float, float]
    line_samples: int
    line_base_n: tuple[int, int]
    line_max_vertices: int


PRESETS: dict[str, EnsembleSpec] = {
    "default": EnsembleSpec(
        exhaustive_max_n=7,
        random_samples=500,
        random_n=(8, 9),
        p_range=SPARSE_P_RANGE,
        line_samples=100,
        line_base_n=(4, 7),
        line_max_vertices=12,
    ),
    "quick": EnsembleSpec(
        exhaustive_max_n=5,
        random_samples=40,
        random_n=(8, 9),
        p_range=SPARSE_P_RANGE,
        line_samples=20,
        line_base_n=(4, 6),
        line_max_vertices=12,
    ),
}


def _node_key(h: nx.Graph) -> None:
    triangles = nx.triangles(h)
    comp_size = {v: len(c) for c in nx.connected_components(h) for v in c}
    for v in h.nodes:
        h.nodes[v]["key"] = f"{h.degree(v)}:{triangles[v]}:{comp_size[v]}"


def _bucket_key(g: Graph) -> tuple[int, int, str]:
    h = to_networkx(g)
    _node_key(h)
    return g.n, g.edge_count, nx.weisfeiler_lehman_graph_hash(h, node_attr="key")


def graphs_up_to(max_n: int) -> list[list[Graph]]:
    """One graph per isomorphism class, grouped by vertex count 1..max_n.

    Each class on n vertices is reached by joining a new vertex to a subset
    of some graph on n-1 vertices. Candidates are bucketed by a
    Weisfeiler-Lehman hash and only compared exactly within a bucket.
    """

    if max_n < 1:
        return []
    levels: list[list[Graph]] = [[Graph.empty(1)]]
    for n in range(2, max_n + 1):
        buckets: dict[tuple[int, int, str], list[nx.Graph]] = {}
        found: list[Graph] = []
        for base in levels[-1]:
            for subset in range(1 << (n - 1)):
                edges = base.edges() + [(v, n - 1) for v in range(n - 1) if subset >> v & 1]
                g = Graph.from_edges(n, edges)
                key = _bucket_key(g)
                h = to_networkx(g)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                found.append(g)
        levels.append(found)
    return levels


def exhaustive_graphs(max_n: int) -> list[EnsembleGraph]:
    out: list[EnsembleGraph] = []
    for graphs in graphs_up_to(max_n):
        for i, g in enumerate(graphs):
            out.append(EnsembleGraph(f"all{g.n}-{i:04d}", g, "exhaustive"))
    return out


def random_claw_free_graphs(
    count: int,
    seed: int,
    n_range: tuple[int, int] = (8, 9),
    p_range: tuple[float, float] = SPARSE_P_RANGE,
    retry_cap: int = DEFAULT_RETRY_CAP,
) -> list[EnsembleGraph]:
    rng = random.Random(seed)
    out: list[EnsembleGraph] = []
    for i in range(count):
        n = rng.randint(*n_range)
        p = round(rng.uniform(*p_range), 3)
        sample_seed = rng.randrange(2**31)
        g = random_claw_free_graph(n, p, sample_seed, retry_cap)
        out.append(EnsembleGraph(f"rcf-{i:04d}", g, f"random-claw-free(n={n},p={p})"))
    return out


def line_graphs(
    count: int,
    seed: int,
    base_n: tuple[int, int] = (4, 7),
    max_vertices: int = 12,
) -> list[EnsembleGraph]:
    """Line graphs of random graphs; kept when they have 1..max_vertices vertices."""

    rng = random.Random(seed + 1)
    out: list[EnsembleGraph] = []
    attempts = 0
    while len(out) < count and attempts < count * 50:
        attempts += 1
        base = random_graph(rng.randint(*base_n), rng.uniform(0.2, 0.7), rng.randrange(2**31))
        if not 1 <= base.edge_count <= max_vertices:
            continue
        out.append(EnsembleGraph(f"line-{len(out):04d}", line_graph(base), "line-graph"))
    return out


def build_ensemble(
    name: str, seed: int = 0, retry_cap: int = DEFAULT_RETRY_CAP
) -> list[EnsembleGraph]:
    spec = PRESETS.get(name)
    if spec is None:
        raise InputError(f"unknown ensemble {name!r}; expected one of {', '.join(ENSEMBLES)}")
    return (
        exhaustive_graphs(spec.exhaustive_max_n)
        + random_claw_free_graphs(
            spec.random_samples, seed, spec.random_n, spec.p_range, retry_cap
        )
        + line_graphs(spec.line_samples, seed, spec.line_base_n, spec.line_max_vertices)
    )


def single_graph(g: Graph, graph_id: str = "input") -> list[EnsembleGraph]:
    return [EnsembleGraph(graph_id, g, "input")]

