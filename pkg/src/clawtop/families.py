from __future__ import annotations

from dataclasses import dataclass
import random

import networkx as nx

from .config import DEFAULT_RETRY_CAP
from .errors import GenerationError, InputError
from .graph import Graph, is_claw_free


FAMILIES = (
    "L",
    "C",
    "path",
    "cycle",
    "complete",
    "star",
    "empty",
    "line-graph",
    "random",
    "random-claw-free",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int = 0
    k: int = 1
    p: float = 0.5
    seed: int = 0
    base: Graph | None = None
    retry_cap: int = DEFAULT_RETRY_CAP

    def describe(self) -> str:
        if self.family in {"L", "C"}:
            return f"{self.family}(n={self.n},k={self.k})"
        if self.family in {"random", "random-claw-free"}:
            return f"{self.family}(n={self.n},p={self.p},seed={self.seed})"
        if self.family == "line-graph":
            return "line-graph"
        return f"{self.family}(n={self.n})"


def _check_n(n: int) -> None:
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")


def _check_k(k: int) -> None:
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")


def interval_graph(n: int, k: int) -> Graph:
    """L_n^k: i < j adjacent iff j - i < k."""

    _check_n(n)
    _check_k(k)
    return Graph.from_edges(
        n, ((i, j) for i in range(n) for j in range(i + 1, min(n, i + k)))
    )


def circular_graph(n: int, k: int) -> Graph:
    """C_n^k: i < j adjacent iff j - i < k or (n + i) - j < k."""

    _check_n(n)
    _check_k(k)
    if n < 2 * k - 1:
        raise InputError(f"C(n,k) needs n >= 2k-1, got n={n}, k={k}")
    return Graph.from_edges(
        n,
        (
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if j - i < k or (n + i) - j < k
        ),
    )


def path_graph(n: int) -> Graph:
    _check_n(n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    _check_n(n)
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0; star_graph(3) is the claw."""

    _check_n(leaves)
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Relabel nodes to 0..n-1 in sorted order (falls back to insertion order)."""

    try:
        nodes = sorted(h.nodes())
    except TypeError:
        nodes = list(h.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((index[a], index[b]) for a, b in h.edges()))


def line_graph(base: Graph) -> Graph:
    """Vertices are the edges of ``base`` in lexicographic order."""

    return from_networkx(nx.line_graph(to_networkx(base)))


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise InputError(f"p must lie in [0, 1], got {p}")


def _sample(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(
        n,
        ((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p),
    )


def random_graph(n: int, p: float, seed: int) -> Graph:
    _check_n(n)
    _check_p(p)
    return _sample(n, p, random.Random(seed))


def random_claw_free_graph(
    n: int, p: float, seed: int, retry_cap: int = DEFAULT_RETRY_CAP
) -> Graph:
    """Rejection-sample G(n, p) until the sample is claw-free."""

    _check_n(n)
    _check_p(p)
    rng = random.Random(seed)
    for _ in range(max(1, retry_cap)):
        g = _sample(n, p, rng)
        if is_claw_free(g):
            return g
    raise GenerationError(
        f"no claw-free sample for n={n}, p={p}, seed={seed} in {retry_cap} tries"
    )


def generate(spec: FamilySpec) -> Graph:
    family = spec.family
    if family == "L":
        return interval_graph(spec.n, spec.k)
    if family == "C":
        return circular_graph(spec.n, spec.k)
    if family == "path":
        return path_graph(spec.n)
    if family == "cycle":
        return cycle_graph(spec.n)
    if family == "complete":
        return complete_graph(spec.n)
    if family == "star":
        return star_graph(spec.n)
    if family == "empty":
        _check_n(spec.n)
        return Graph.empty(spec.n)
    if family == "line-graph":
        if spec.base is None:
            raise InputError("line-graph needs a base graph")
        return line_graph(spec.base)
    if family == "random":
        return random_graph(spec.n, spec.p, spec.seed)
    if family == "random-claw-free":
        return random_claw_free_graph(spec.n, spec.p, spec.seed, spec.retry_cap)
    raise InputError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
