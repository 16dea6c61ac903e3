from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence
import hashlib
import json

from .config import DEFAULT_FACE_CAP, DEFAULT_VERTEX_CAP
from .errors import InputError, ResourceCapError
from .graph import Graph, members


Face = tuple[int, ...]


def _faces_by_dim(faces: Iterable[Iterable[int]]) -> tuple[frozenset[Face], ...]:
    buckets: dict[int, set[Face]] = {}
    for f in faces:
        face = tuple(sorted(set(f)))
        if not face:
            continue
        buckets.setdefault(len(face) - 1, set()).add(face)
    if not buckets:
        return ()
    top = max(buckets)
    return tuple(frozenset(buckets.get(d, ())) for d in range(top + 1))


def _closure(facets: Iterable[Iterable[int]]) -> set[Face]:
    out: set[Face] = set()
    for f in facets:
        face = tuple(sorted(set(f)))
        if face in out:
            continue
        for r in range(1, len(face) + 1):
            out.update(combinations(face, r))
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces grouped by dimension over the vertex universe 0..universe-1.

    The empty face is implicit. A complex with no faces at all is the empty
    space; there is no separate "void" complex.
    """

    universe: int
    faces_by_dim: tuple[frozenset[Face], ...]

    def __post_init__(self) -> None:
        for d, faces in enumerate(self.faces_by_dim):
            for f in faces:
                if len(f) != d + 1:
                    raise InputError(f"face {f} listed in dimension {d}")
                if list(f) != sorted(set(f)):
                    raise InputError(f"face {f} is not a sorted vertex tuple")
                if f[0] < 0 or f[-1] >= self.universe:
                    raise InputError(f"face {f} leaves universe 0..{self.universe - 1}")

    @classmethod
    def from_faces(
        cls, universe: int, faces: Iterable[Iterable[int]], close: bool = True
    ) -> "SimplicialComplex":
        fs: Iterable[Iterable[int]] = _closure(faces) if close else faces
        return cls(universe=universe, faces_by_dim=_faces_by_dim(fs))

    @classmethod
    def from_facets(
        cls, universe: int, facets: Iterable[Iterable[int]]
    ) -> "SimplicialComplex":
        return cls.from_faces(universe, facets, close=True)

    @classmethod
    def empty(cls, universe: int = 0) -> "SimplicialComplex":
        return cls(universe=universe, faces_by_dim=())

    @property
    def is_empty(self) -> bool:
        return not self.faces_by_dim

    @property
    def dimension(self) -> int:
        return len(self.faces_by_dim) - 1

    def faces(self, d: int) -> list[Face]:
        if 0 <= d < len(self.faces_by_dim):
            return sorted(self.faces_by_dim[d])
        return []

    def all_faces(self) -> list[Face]:
        return [f for d in range(len(self.faces_by_dim)) for f in self.faces(d)]

    @cached_property
    def face_set(self) -> frozenset[Face]:
        return frozenset(f for faces in self.faces_by_dim for f in faces)

    def __contains__(self, face: object) -> bool:
        if not isinstance(face, tuple):
            return False
        return tuple(sorted(face)) in self.face_set

    def face_count(self) -> int:
        return sum(len(fs) for fs in self.faces_by_dim)

    def vertices(self) -> list[int]:
        return [f[0] for f in self.faces(0)]

    def facets(self) -> list[Face]:
        covered: set[Face] = set()
        for d in range(1, len(self.faces_by_dim)):
            for f in self.faces_by_dim[d]:
                covered.update(combinations(f, d))
        return [f for f in self.all_faces() if f not in covered]

    def f_vector(self) -> list[int]:
        return [len(fs) for fs in self.faces_by_dim]

    def is_downward_closed(self) -> bool:
        faces = self.face_set
        for d in range(1, len(self.faces_by_dim)):
            for f in self.faces_by_dim[d]:
                if any(sub not in faces for sub in combinations(f, d)):
                    return False
        return True

    def canonical_key(self) -> str:
        payload = json.dumps(
            {"universe": self.universe, "facets": [list(f) for f in self.facets()]},
            separators=(",", ":"),
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def to_json(self) -> dict[str, object]:
        return {"universe": self.universe, "facets": [list(f) for f in self.facets()]}

    @classmethod
    def from_json(cls, data: dict[str, object]) -> "SimplicialComplex":
        try:
            universe = int(data["universe"])  # type: ignore[arg-type]
            facets = [tuple(int(x) for x in f) for f in data["facets"]]  # type: ignore[union-attr]
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"bad complex JSON: {e}") from e
        return cls.from_facets(universe, facets)


def point() -> SimplicialComplex:
    return SimplicialComplex.from_faces(1, [(0,)])


def full_simplex(n: int) -> SimplicialComplex:
    if n <= 0:
        return SimplicialComplex.empty(0)
    return SimplicialComplex.from_facets(n, [tuple(range(n))])


def independence_complex(
    g: Graph,
    max_vertices: int = DEFAULT_VERTEX_CAP,
    max_faces: int = DEFAULT_FACE_CAP,
) -> SimplicialComplex:
    """Ind(G): faces are the nonempty independent sets of G.

    Independent sets are grown one dimension at a time; each face carries the
    mask of larger vertices that can still extend it.
    """

    if g.n > max_vertices:
        raise ResourceCapError(f"graph has {g.n} vertices, cap is {max_vertices}")
    masks = g.masks
    full = g.full_mask
    level: list[tuple[Face, int]] = [
        ((v,), full & ~masks[v] & ~((1 << (v + 1)) - 1)) for v in g.vertices
    ]
    dims: list[frozenset[Face]] = []
    while level:
        if len(level) > max_faces:
            raise ResourceCapError(
                f"dimension {len(dims)} has more than {max_faces} faces"
            )
        dims.append(frozenset(face for face, _ in level))
        nxt: list[tuple[Face, int]] = []
        for face, avail in level:
            for c in members(avail):
                nxt.append((face + (c,), avail & ~masks[c] & ~((1 << (c + 1)) - 1)))
        level = nxt
    return SimplicialComplex(universe=g.n, faces_by_dim=tuple(dims))


def induced_subcomplex(
    cx: SimplicialComplex, vertices: Iterable[int], relabel: bool = False
) -> SimplicialComplex:
    """Faces of ``cx`` inside U; with ``relabel`` the kept vertices become 0..|U|-1."""

    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < cx.universe:
            raise InputError(f"vertex {v} outside universe 0..{cx.universe - 1}")
    kept = set(keep)
    faces = [f for f in cx.all_faces() if kept.issuperset(f)]
    if not relabel:
        return SimplicialComplex.from_faces(cx.universe, faces, close=False)
    index = {old: new for new, old in enumerate(keep)}
    return SimplicialComplex.from_faces(
        len(keep), (tuple(index[v] for v in f) for f in faces), close=False
    )


def cone_apex(cx: SimplicialComplex) -> int | None:
    """A vertex lying in every facet, if any; such a vertex extends every face."""

    if cx.is_empty:
        return None
    common: set[int] | None = None
    for f in cx.facets():
        common = set(f) if common is None else common & set(f)
        if not common:
            return None
    return min(common) if common else None


def suspension(cx: SimplicialComplex) -> SimplicialComplex:
    """Join with two new apex vertices; susp of the empty complex is S^0."""

    a, b = cx.universe, cx.universe + 1
    faces: list[Face] = [(a,), (b,)]
    for f in cx.all_faces():
        faces.extend((f, f + (a,), f + (b,)))
    return SimplicialComplex.from_faces(cx.universe + 2, faces, close=False)


def _relabel(cx: SimplicialComplex, mapping: dict[int, int]) -> list[Face]:
    return [tuple(sorted(mapping[v] for v in f)) for f in cx.all_faces()]


def wedge(
    complexes: Sequence[SimplicialComplex],
    basepoints: Sequence[int | None] | None = None,
) -> SimplicialComplex:
    """One-point union identifying each summand's basepoint with vertex 0.

    Empty summands are dropped; the wedge of nothing is a point.
    """

    if basepoints is None:
        basepoints = [None] * len(complexes)
    if len(basepoints) != len(complexes):
        raise InputError("wedge needs one basepoint per summand")

    faces: list[Face] = [(0,)]
    offset = 1
    for cx, base in zip(complexes, basepoints):
        if cx.is_empty:
            continue
        verts = cx.vertices()
        if base is None:
            base = verts[0]
        elif (base,) not in cx.face_set:
            raise InputError(f"basepoint {base} is not a vertex of its summand")
        mapping: dict[int, int] = {base: 0}
        for v in verts:
            if v != base:
                mapping[v] = offset
                offset += 1
        faces.extend(_relabel(cx, mapping))
    return SimplicialComplex.from_faces(offset, faces, close=False)


def disjoint_union(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    shift = first.universe
    faces = first.all_faces() + [tuple(v + shift for v in f) for f in second.all_faces()]
    return SimplicialComplex.from_faces(first.universe + second.universe, faces, close=False)


def f_vector(cx: SimplicialComplex) -> list[int]:
    return cx.f_vector()


def independent_set_counts(g: Graph) -> list[int]:
    """f-vector of Ind(G) without listing faces: count[d] sets of size d+1."""

    masks = g.masks
    memo: dict[int, tuple[int, ...]] = {}

    def count(avail: int) -> tuple[int, ...]:
        # counts by size, including the empty set at index 0
        if not avail:
            return (1,)
        hit = memo.get(avail)
        if hit is not None:
            return hit
        v = avail.bit_length() - 1
        without = count(avail & ~(1 << v))
        with_v = count(avail & ~(1 << v) & ~masks[v])
        size = max(len(without), len(with_v) + 1)
        out = [0] * size
        for i, c in enumerate(without):
            out[i] += c
        for i, c in enumerate(with_v):
            out[i + 1] += c
        memo[avail] = tuple(out)
        return memo[avail]

    return list(count(g.full_mask)[1:])
