from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, max_degree


BOUND_TAGS = ("general", "claw_free", "l_family", "c_family")


@dataclass(frozen=True)
class BoundKind:
    """Which connectivity bound to evaluate, with its parameters.

    ``general`` and ``claw_free`` take (n, d); ``l_family`` and ``c_family``
    take (n, k).
    """

    tag: str
    n: int
    d: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.tag not in BOUND_TAGS:
            raise InputError(
                f"unknown bound kind {self.tag!r}; expected one of {', '.join(BOUND_TAGS)}"
            )
        if self.n < 1:
            raise InputError(f"bound needs n >= 1, got {self.n}")
        if self.tag in {"general", "claw_free"}:
            if self.d is None or self.d < 0:
                raise InputError(f"{self.tag} bound needs a max degree d >= 0")
            if self.d > self.n - 1:
                raise InputError(f"max degree {self.d} impossible on {self.n} vertices")
        else:
            if self.k is None or self.k < 1:
                raise InputError(f"{self.tag} bound needs k >= 1")
            if self.tag == "c_family":
                if self.n < 6 * (self.k - 1):
                    raise InputError(
                        f"c_family bound needs n >= 6(k-1), got n={self.n}, k={self.k}"
                    )
                if self.n < 2 * self.k - 1:
                    raise InputError(
                        f"c_family bound needs n >= 2k-1, got n={self.n}, k={self.k}"
                    )

    @classmethod
    def for_graph(cls, tag: str, g: Graph) -> "BoundKind":
        return cls(tag=tag, n=g.n, d=max_degree(g))

    def describe(self) -> str:
        if self.tag in {"general", "claw_free"}:
            return f"{self.tag}(n={self.n},d={self.d})"
        return f"{self.tag}(n={self.n},k={self.k})"


def bound_value(kind: BoundKind) -> int:
    """Claimed connectivity; the floor applies to the whole expression.

    d = 0 has no formula (the complex is a simplex) and is rejected here.
    """

    n = kind.n
    if kind.tag == "claw_free":
        d = _degree(kind)
        # floor((2n-1)/(3d+2) - 1)
        return (2 * n - 1) // (3 * d + 2) - 1
    if kind.tag == "general":
        d = _degree(kind)
        return (n - 2 * d - 1) // (2 * d)
    k = kind.k or 1
    if kind.tag == "l_family":
        return (n - 1) // (2 * k - 1) - 1
    return (n + 1) // (2 * k - 1) - 2


def _degree(kind: BoundKind) -> int:
    if not kind.d:
        raise InputError(f"{kind.tag} bound needs d >= 1; d = 0 is contractible")
    return kind.d


def claw_free_inequality_bound(d: int) -> int:
    """Upper bound on |closed N(u) together with N(v1) and N(v2) in common|."""

    return (3 * d + 2) // 2
