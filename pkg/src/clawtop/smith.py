from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np


Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [
        [sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(cols)]
        for i in range(len(a))
    ]


@dataclass(frozen=True)
class SmithForm:
    """D = U * M * V with D diagonal and d_1 | d_2 | ... | d_r positive."""

    diagonal: tuple[tuple[int, ...], ...]
    rank: int
    divisors: tuple[int, ...]
    left: tuple[tuple[int, ...], ...] | None = None
    right: tuple[tuple[int, ...], ...] | None = None

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.divisors if d > 1)


def _swap_rows(a: Matrix, i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]


def _swap_cols(a: Matrix, i: int, j: int) -> None:
    for row in a:
        row[i], row[j] = row[j], row[i]


def _row_sub(a: Matrix, target: int, source: int, q: int) -> None:
    src = a[source]
    a[target] = [x - q * y for x, y in zip(a[target], src)]


def _col_sub(a: Matrix, target: int, source: int, q: int) -> None:
    for row in a:
        row[target] -= q * row[source]


def smith_normal_form(
    matrix: Sequence[Sequence[int]],
    ncols: int | None = None,
    with_transforms: bool = True,
) -> SmithForm:
    """Exact Smith normal form over the integers.

    The smallest nonzero entry is moved to the pivot, its row and column are
    cleared by division with remainder, and a row that breaks divisibility is
    folded into the pivot row until the pivot divides the rest.
    """

    a: Matrix = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    u: Matrix | None = identity(m) if with_transforms else None
    v: Matrix | None = identity(n) if with_transforms else None

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            _swap_rows(a, i, j)
            if u is not None:
                _swap_rows(u, i, j)

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            _swap_cols(a, i, j)
            if v is not None:
                _swap_cols(v, i, j)

    t = 0
    while t < min(m, n):
        pivot: tuple[int, int] | None = None
        best = 0
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (pivot is None or abs(x) < best):
                    pivot, best = (i, j), abs(x)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    _row_sub(a, i, t, q)
                    if u is not None:
                        _row_sub(u, i, t, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    _col_sub(a, j, t, q)
                    if v is not None:
                        _col_sub(v, j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        clean = False
            if not clean:
                continue
            p = a[t][t]
            bad = next(
                (i for i in range(t + 1, m) if any(x % p for x in a[i][t + 1 :])),
                None,
            )
            if bad is None:
                break
            _row_sub(a, t, bad, -1)
            if u is not None:
                _row_sub(u, t, bad, -1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
        t += 1

    divisors = tuple(a[i][i] for i in range(min(m, n)) if a[i][i])
    return SmithForm(
        diagonal=tuple(tuple(row) for row in a),
        rank=len(divisors),
        divisors=divisors,
        left=tuple(tuple(row) for row in u) if u is not None else None,
        right=tuple(tuple(row) for row in v) if v is not None else None,
    )


def elementary_divisors(
    columns: Sequence[Mapping[int, int]],
) -> tuple[int, tuple[int, ...]]:
    """Rank and nonunit elementary divisors of a sparse column matrix.

    Unit pivots are eliminated sparsely first (a unit pivot contributes a
    divisor 1 and leaves the other divisors unchanged); the dense Smith form
    only sees what is left.
    """

    cols: dict[int, dict[int, int]] = {
        ci: {r: x for r, x in col.items() if x} for ci, col in enumerate(columns)
    }
    cols = {ci: c for ci, c in cols.items() if c}
    row_index: dict[int, set[int]] = {}
    for ci, col in cols.items():
        for r in col:
            row_index.setdefault(r, set()).add(ci)

    rank = 0
    changed = True
    while changed:
        changed = False
        for ci in sorted(cols):
            col = cols.get(ci)
            if col is None:
                continue
            if not col:
                del cols[ci]
                continue
            r = next((r for r in sorted(col) if col[r] in (1, -1)), None)
            if r is None:
                continue
            unit = col[r]
            for cj in sorted(row_index.get(r, ())):
                if cj == ci:
                    continue
                other = cols[cj]
                f = other[r] * unit
                for rr, x in col.items():
                    val = other.get(rr, 0) - f * x
                    if val:
                        other[rr] = val
                        row_index.setdefault(rr, set()).add(cj)
                    else:
                        other.pop(rr, None)
                        row_index[rr].discard(cj)
                if not other:
                    del cols[cj]
            for rr in col:
                row_index[rr].discard(ci)
            del cols[ci]
            rank += 1
            changed = True

    if not cols:
        return rank, ()
    rows = sorted({r for col in cols.values() for r in col})
    pos = {r: i for i, r in enumerate(rows)}
    keys = sorted(cols)
    dense = [[0] * len(keys) for _ in rows]
    for j, ci in enumerate(keys):
        for r, x in cols[ci].items():
            dense[pos[r]][j] = x
    form = smith_normal_form(dense, ncols=len(keys), with_transforms=False)
    return rank + form.rank, form.torsion


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""

    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank_over_field(matrix: Sequence[Sequence[int]], p: int = 0) -> int:
    """Rank over Q (p = 0, floating point) or over GF(p) for a prime p."""

    if not matrix or not len(matrix[0]):
        return 0
    if p == 0:
        return int(np.linalg.matrix_rank(np.array(matrix, dtype=float)))
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(a[r:, c])[0]
        if not nz.size:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        below = np.nonzero(a[:, c])[0]
        for i in below:
            if i != r:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        r += 1
        if r == rows:
            break
    return r


def is_divisibility_chain(divisors: Sequence[int]) -> bool:
    return all(d > 0 for d in divisors) and all(
        b % a == 0 for a, b in zip(divisors, divisors[1:])
    )
