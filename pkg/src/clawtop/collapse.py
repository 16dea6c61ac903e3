from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
import heapq

from .complex import Face, SimplicialComplex, independence_complex
from .config import DEFAULT_FACE_CAP, DEFAULT_VERTEX_CAP
from .errors import CollapseError, InputError
from .graph import Graph, remove_vertices


CollapseStep = tuple[Face, Face]


def _immediate_cofaces(faces: set[Face], sigma: Face, universe: int) -> list[Face]:
    present = set(sigma)
    out: list[Face] = []
    for x in range(universe):
        if x in present:
            continue
        tau = tuple(sorted(sigma + (x,)))
        if tau in faces:
            out.append(tau)
    return out


@dataclass(frozen=True)
class CollapseSequence:
    """Ordered elementary collapses (sigma, tau) with tau = sigma plus one vertex."""

    steps: tuple[CollapseStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def replay(self, start: SimplicialComplex) -> SimplicialComplex:
        """Apply every step, checking that each sigma is a free face at that moment."""

        faces = set(start.face_set)
        for i, (sigma, tau) in enumerate(self.steps):
            if sigma not in faces or tau not in faces:
                raise CollapseError(f"step {i}: {sigma} or {tau} is not a current face")
            if len(tau) != len(sigma) + 1 or not set(sigma) < set(tau):
                raise CollapseError(f"step {i}: {tau} is not a facet-extension of {sigma}")
            cofaces = _immediate_cofaces(faces, sigma, start.universe)
            if cofaces != [tau]:
                raise CollapseError(
                    f"step {i}: {sigma} is not free (cofaces {cofaces})"
                )
            faces.discard(tau)
            faces.discard(sigma)
        return SimplicialComplex.from_faces(start.universe, faces, close=False)

    def to_json(self) -> list[list[list[int]]]:
        return [[list(sigma), list(tau)] for sigma, tau in self.steps]

    @classmethod
    def from_json(cls, data: list[list[list[int]]]) -> "CollapseSequence":
        try:
            return cls(
                steps=tuple((tuple(s), tuple(t)) for s, t in data)  # type: ignore[misc]
            )
        except (TypeError, ValueError) as e:
            raise InputError(f"bad collapse trace: {e}") from e


@dataclass(frozen=True)
class FoldRecord:
    """A fold kept ``kept`` and removed ``removed``; both in original labels."""

    kept: int
    removed: int

    def to_json(self) -> dict[str, int]:
        return {"kept": self.kept, "removed": self.removed}


@dataclass(frozen=True)
class FoldResult:
    graph: Graph
    record: FoldRecord
    sequence: CollapseSequence | None = None


def can_fold(g: Graph, v: int, w: int) -> bool:
    """N(v) is contained in N(w), for distinct v and w."""

    return v != w and not (g.masks[v] & ~g.masks[w])


def fold_collapse(
    g: Graph,
    v: int,
    w: int,
    materialize: bool = True,
    cx: SimplicialComplex | None = None,
    max_vertices: int = DEFAULT_VERTEX_CAP,
    max_faces: int = DEFAULT_FACE_CAP,
) -> FoldResult:
    """Remove w when N(v) is contained in N(w).

    With ``materialize`` the collapse of Ind(G) onto Ind(G minus w) is emitted:
    every face holding w but not v, larger faces first, paired with its
    v-extension. The sequence is replayed before it is returned.
    """

    for x in (v, w):
        if not 0 <= x < g.n:
            raise InputError(f"vertex {x} out of range 0..{g.n - 1}")
    if v == w:
        raise InputError("fold needs two distinct vertices")
    if not can_fold(g, v, w):
        raise InputError(f"N({v}) is not contained in N({w})")

    record = FoldRecord(kept=g.labels[v], removed=g.labels[w])
    smaller = remove_vertices(g, [w])
    if not materialize:
        return FoldResult(graph=smaller, record=record)

    if cx is None:
        cx = independence_complex(g, max_vertices=max_vertices, max_faces=max_faces)
    sigmas = [f for f in cx.all_faces() if w in f and v not in f]
    sigmas.sort(key=lambda f: (-len(f), f))
    sequence = CollapseSequence(
        steps=tuple((s, tuple(sorted(s + (v,)))) for s in sigmas)
    )
    sequence.replay(cx)
    return FoldResult(graph=smaller, record=record, sequence=sequence)


def find_fold(g: Graph) -> tuple[int, int] | None:
    """First (v, w) in lexicographic order with N(v) inside N(w).

    When N(v) = N(w) only the pair removing the larger label qualifies.
    """

    masks = g.masks
    for v in g.vertices:
        for w in g.vertices:
            if not can_fold(g, v, w):
                continue
            if masks[v] == masks[w] and w < v:
                continue
            return v, w
    return None


def greedy_fold_reduce(g: Graph) -> tuple[Graph, list[FoldRecord]]:
    records: list[FoldRecord] = []
    current = g
    while True:
        pair = find_fold(current)
        if pair is None:
            return current, records
        result = fold_collapse(current, *pair, materialize=False)
        records.append(result.record)
        current = result.graph


def find_free_face_collapses(cx: SimplicialComplex) -> CollapseSequence:
    """Greedy elementary collapses; larger faces first, then lexicographic."""

    faces = set(cx.face_set)
    cofaces: dict[Face, set[Face]] = {f: set() for f in faces}
    for f in faces:
        if len(f) > 1:
            for sub in combinations(f, len(f) - 1):
                cofaces[sub].add(f)

    heap = [(-len(f), f) for f, c in cofaces.items() if len(c) == 1]
    heapq.heapify(heap)
    steps: list[CollapseStep] = []
    while heap:
        _, sigma = heapq.heappop(heap)
        if sigma not in faces or len(cofaces[sigma]) != 1:
            continue
        (tau,) = cofaces[sigma]
        steps.append((sigma, tau))
        for gone in (tau, sigma):
            faces.discard(gone)
            if len(gone) == 1:
                continue
            for sub in combinations(gone, len(gone) - 1):
                if sub not in faces:
                    continue
                cofaces[sub].discard(gone)
                if len(cofaces[sub]) == 1:
                    heapq.heappush(heap, (-len(sub), sub))
    return CollapseSequence(steps=tuple(steps))


def free_face_collapse(cx: SimplicialComplex) -> SimplicialComplex:
    """Collapse free faces until none is left."""

    sequence = find_free_face_collapses(cx)
    removed = {f for step in sequence.steps for f in step}
    return SimplicialComplex.from_faces(
        cx.universe, (f for f in cx.face_set if f not in removed), close=False
    )
