from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import InputError


VertexSet = frozenset[int]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Vertices of a bit mask in increasing order."""

    out: list[int] = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices 0..n-1.

    ``labels`` maps each vertex to its label in the graph it was cut out of.
    It is bookkeeping only and takes no part in equality or hashing.
    """

    n: int
    adj: tuple[VertexSet, ...]
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be >= 0, got {self.n}")
        if len(self.adj) != self.n:
            raise InputError(
                f"adjacency has {len(self.adj)} entries for {self.n} vertices"
            )
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise InputError(f"edge {u}-{v} leaves vertex range 0..{self.n - 1}")
                if v == u:
                    raise InputError(f"self-loop at vertex {u}")
                if u not in self.adj[v]:
                    raise InputError(f"adjacency is not symmetric at {u}-{v}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        elif len(self.labels) != self.n:
            raise InputError("labels must name every vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(max(n, 0))]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {u}-{v} leaves vertex range 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n=n, adj=tuple(frozenset(a) for a in adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, ())

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(a) for a in self.adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range 0..{self.n - 1}")

    def _check_set(self, vertices: Iterable[int]) -> VertexSet:
        out = frozenset(vertices)
        for v in out:
            self._check_vertex(v)
        return out

    def is_independent(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return all(not (self.masks[v] & m) for v in members(m))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def original_labels(self, vertices: Iterable[int]) -> list[int]:
        return sorted(self.labels[v] for v in vertices)


def neighborhood(g: Graph, v: int, closed: bool = False) -> VertexSet:
    g._check_vertex(v)
    if closed:
        return g.adj[v] | {v}
    return g.adj[v]


def closed_union(g: Graph, vertices: Iterable[int]) -> VertexSet:
    out: set[int] = set()
    for v in vertices:
        out |= neighborhood(g, v, closed=True)
    return frozenset(out)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """G[U], relabeled 0..|U|-1 in increasing order of the kept vertices."""

    kept = sorted(g._check_set(vertices))
    index = {old: new for new, old in enumerate(kept)}
    adj = tuple(
        frozenset(index[w] for w in g.adj[old] if w in index) for old in kept
    )
    return Graph(n=len(kept), adj=adj, labels=tuple(g.labels[old] for old in kept))


def remove_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """G minus U, that is G[V(G) minus U]."""

    drop = g._check_set(vertices)
    return induced_subgraph(g, (v for v in g.vertices if v not in drop))


def complement(g: Graph) -> Graph:
    everyone = frozenset(g.vertices)
    adj = tuple(everyone - g.adj[v] - {v} for v in g.vertices)
    return Graph(n=g.n, adj=adj, labels=g.labels)


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adj), default=0)


def is_complete(g: Graph, vertices: Iterable[int] | None = None) -> bool:
    vs = list(g.vertices) if vertices is None else sorted(g._check_set(vertices))
    return all(g.has_edge(a, b) for a, b in combinations(vs, 2))


def is_claw_free(g: Graph) -> bool:
    """True iff the complement of every G[N(u)] is triangle-free."""

    masks = g.masks
    for u in g.vertices:
        nbrs = members(masks[u])
        nmask = masks[u]
        for i, a in enumerate(nbrs):
            # neighbours of u that are not adjacent to a
            far_a = nmask & ~masks[a] & ~(1 << a)
            for b in nbrs[i + 1 :]:
                if not (far_a >> b) & 1:
                    continue
                third = far_a & ~masks[b] & ~(1 << b)
                if third >> (b + 1):
                    return False
    return True


def find_induced_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """Brute-force 4-subset scan; returns (center, leaf, leaf, leaf) or None."""

    for quad in combinations(g.vertices, 4):
        for center in quad:
            leaves = [x for x in quad if x != center]
            if all(g.has_edge(center, x) for x in leaves) and g.is_independent(leaves):
                return (center, leaves[0], leaves[1], leaves[2])
    return None


def check_complete_outer_neighborhood(g: Graph, u: int, v: int) -> bool:
    """Whether G[N(v) minus closed N(u)] is complete, for v a neighbour of u."""

    g._check_vertex(u)
    g._check_vertex(v)
    if v not in g.adj[u]:
        raise InputError(f"vertex {v} is not a neighbour of {u}")
    outer = neighborhood(g, v) - neighborhood(g, u, closed=True)
    return is_complete(g, outer)
