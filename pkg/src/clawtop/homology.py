from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import Face, SimplicialComplex
from .config import DEFAULT_FACE_CAP
from .errors import ResourceCapError, VerificationError
from .smith import elementary_divisors, rank_over_field


@dataclass(frozen=True)
class BoundaryMatrix:
    """Boundary map from dim-faces to (dim-1)-faces as sparse columns.

    ``dim == 0`` is the augmentation onto the empty face, which is what makes
    the homology reduced.
    """

    dim: int
    row_faces: tuple[Face, ...]
    col_faces: tuple[Face, ...]
    columns: tuple[dict[int, int], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_faces), len(self.col_faces)

    def to_dense(self) -> list[list[int]]:
        rows, cols = self.shape
        dense = [[0] * cols for _ in range(rows)]
        for j, col in enumerate(self.columns):
            for i, x in col.items():
                dense[i][j] = x
        return dense


def boundary_matrices(
    cx: SimplicialComplex, max_faces: int = DEFAULT_FACE_CAP
) -> list[BoundaryMatrix]:
    """Alternating-sign boundaries over sorted-tuple bases, augmentation first."""

    for d, faces in enumerate(cx.faces_by_dim):
        if len(faces) > max_faces:
            raise ResourceCapError(
                f"dimension {d} has {len(faces)} faces, cap is {max_faces}"
            )
    if cx.is_empty:
        return []

    bases: list[tuple[Face, ...]] = [((),)] + [
        tuple(cx.faces(d)) for d in range(cx.dimension + 1)
    ]
    out: list[BoundaryMatrix] = []
    for d in range(cx.dimension + 1):
        rows, cols = bases[d], bases[d + 1]
        index = {f: i for i, f in enumerate(rows)}
        columns: list[dict[int, int]] = []
        for f in cols:
            col: dict[int, int] = {}
            for i in range(len(f)):
                col[index[f[:i] + f[i + 1 :]]] = -1 if i % 2 else 1
            columns.append(col)
        out.append(
            BoundaryMatrix(dim=d, row_faces=rows, col_faces=cols, columns=tuple(columns))
        )
    return out


def check_boundary_squares(matrices: Sequence[BoundaryMatrix]) -> None:
    """Raise unless every composite d_{d} o d_{d+1} vanishes."""

    for low, high in zip(matrices, matrices[1:]):
        for j, col in enumerate(high.columns):
            acc: dict[int, int] = {}
            for mid, x in col.items():
                for i, y in low.columns[mid].items():
                    acc[i] = acc.get(i, 0) + x * y
            if any(acc.values()):
                raise VerificationError(
                    f"boundary square nonzero at dimension {high.dim}, column {j}"
                )


@dataclass(frozen=True)
class HomologyGroup:
    betti: int = 0
    torsion: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def to_json(self) -> dict[str, object]:
        return {"betti": self.betti, "torsion": list(self.torsion)}


def _normalize(groups: Iterable[HomologyGroup]) -> tuple[HomologyGroup, ...]:
    gs = [HomologyGroup(g.betti, tuple(sorted(g.torsion))) for g in groups]
    while gs and gs[-1].is_zero:
        gs.pop()
    return tuple(gs)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integral homology; ``groups[i]`` is H~_i.

    Trailing trivial groups are dropped, so equal profiles compare equal. The
    empty complex carries ``empty=True`` and no groups.
    """

    groups: tuple[HomologyGroup, ...] = ()
    empty: bool = False

    @classmethod
    def of(cls, groups: Iterable[HomologyGroup]) -> "HomologyProfile":
        return cls(groups=_normalize(groups))

    @classmethod
    def empty_space(cls) -> "HomologyProfile":
        return cls(groups=(), empty=True)

    @classmethod
    def sphere(cls, dim: int) -> "HomologyProfile":
        if dim < 0:
            return cls.empty_space()
        return cls.of([HomologyGroup()] * dim + [HomologyGroup(betti=1)])

    def group(self, i: int) -> HomologyGroup:
        if 0 <= i < len(self.groups):
            return self.groups[i]
        return HomologyGroup()

    def betti(self, i: int) -> int:
        return self.group(i).betti

    def torsion(self, i: int) -> tuple[int, ...]:
        return self.group(i).torsion

    @property
    def is_acyclic(self) -> bool:
        return not self.empty and not self.groups

    def first_nonzero(self) -> int | None:
        for i, g in enumerate(self.groups):
            if not g.is_zero:
                return i
        return None

    def suspend(self) -> "HomologyProfile":
        """Suspension isomorphism; the suspension of the empty space is S^0."""

        if self.empty:
            return HomologyProfile.sphere(0)
        if not self.groups:
            return self
        return HomologyProfile.of((HomologyGroup(),) + self.groups)

    def field_betti(self, p: int) -> list[int]:
        """Betti numbers over Q (p=0) or GF(p) by universal coefficients."""

        out: list[int] = []
        for i in range(len(self.groups) + 1):
            b = self.betti(i)
            if p:
                b += sum(1 for t in self.torsion(i) if t % p == 0)
                b += sum(1 for t in self.torsion(i - 1) if t % p == 0)
            out.append(b)
        while out and out[-1] == 0:
            out.pop()
        return out

    def reduced_euler_characteristic(self) -> int:
        if self.empty:
            return -1
        return sum((-1) ** i * g.betti for i, g in enumerate(self.groups))

    def to_json(self) -> dict[str, object]:
        return {
            "empty": self.empty,
            "dims": {str(i): g.to_json() for i, g in enumerate(self.groups)},
        }

    @classmethod
    def from_json(cls, data: dict[str, object]) -> "HomologyProfile":
        if data.get("empty"):
            return cls.empty_space()
        dims = data.get("dims") or {}
        assert isinstance(dims, dict)
        top = max((int(k) for k in dims), default=-1)
        groups = []
        for i in range(top + 1):
            g = dims.get(str(i)) or {}
            groups.append(
                HomologyGroup(
                    betti=int(g.get("betti", 0)),
                    torsion=tuple(int(t) for t in g.get("torsion", ())),
                )
            )
        return cls.of(groups)


def direct_sum(profiles: Iterable[HomologyProfile]) -> HomologyProfile:
    """Homology of a wedge: empty summands are dropped, no summands gives a point."""

    ps = [p for p in profiles if not p.empty]
    top = max((len(p.groups) for p in ps), default=0)
    groups = []
    for i in range(top):
        groups.append(
            HomologyGroup(
                betti=sum(p.betti(i) for p in ps),
                torsion=tuple(t for p in ps for t in p.torsion(i)),
            )
        )
    return HomologyProfile.of(groups)


def reduced_homology(
    cx: SimplicialComplex, max_faces: int = DEFAULT_FACE_CAP
) -> HomologyProfile:
    """H~_i = ker d_i / im d_{i+1}, from ranks and elementary divisors.

    Raises VerificationError if some composite of boundaries is nonzero.
    """

    if cx.is_empty:
        return HomologyProfile.empty_space()
    matrices = boundary_matrices(cx, max_faces=max_faces)
    check_boundary_squares(matrices)
    reduced = [elementary_divisors(m.columns) for m in matrices]
    groups = []
    for d, m in enumerate(matrices):
        rank_d = reduced[d][0]
        rank_up, torsion_up = reduced[d + 1] if d + 1 < len(reduced) else (0, ())
        groups.append(
            HomologyGroup(betti=len(m.col_faces) - rank_d - rank_up, torsion=torsion_up)
        )
    return HomologyProfile.of(groups)


def field_betti_numbers(
    cx: SimplicialComplex, p: int = 0, max_faces: int = DEFAULT_FACE_CAP
) -> list[int]:
    """Reduced Betti numbers over Q (p = 0) or GF(p), computed from scratch."""

    if cx.is_empty:
        return []
    matrices = boundary_matrices(cx, max_faces=max_faces)
    check_boundary_squares(matrices)
    ranks = [rank_over_field(m.to_dense(), p) for m in matrices]
    out = []
    for d, m in enumerate(matrices):
        up = ranks[d + 1] if d + 1 < len(ranks) else 0
        out.append(len(m.col_faces) - ranks[d] - up)
    while out and out[-1] == 0:
        out.pop()
    return out
