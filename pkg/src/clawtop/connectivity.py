from __future__ import annotations

from dataclasses import dataclass
import math

from .collapse import free_face_collapse
from .complex import SimplicialComplex, cone_apex
from .fundamental_group import Pi1Status
from .homology import HomologyProfile, reduced_homology


CONTRACTIBLE = "contractible"
# all reduced homology vanishes but no contraction was exhibited
ACYCLIC = "acyclic"

Connectivity = int | str


def conn_value(conn: Connectivity) -> float:
    if conn in (CONTRACTIBLE, ACYCLIC):
        return math.inf
    return float(conn)


def meets(conn: Connectivity, required: float) -> bool:
    """Whether a measured connectivity is at least ``required``."""

    return conn_value(conn) >= required


def connectivity_from_profile(profile: HomologyProfile) -> Connectivity:
    """Largest n with H~_i = 0 for every i <= n; -2 for the empty space."""

    if profile.empty:
        return -2
    first = profile.first_nonzero()
    if first is None:
        return ACYCLIC
    return first - 1


def homological_connectivity(
    cx: SimplicialComplex, profile: HomologyProfile | None = None
) -> Connectivity:
    if cx.is_empty:
        return -2
    if cone_apex(cx) is not None:
        return CONTRACTIBLE
    if profile is None:
        profile = reduced_homology(cx)
    conn = connectivity_from_profile(profile)
    if conn == ACYCLIC and free_face_collapse(cx).face_count() == 1:
        return CONTRACTIBLE
    return conn


def format_connectivity(conn: Connectivity | None) -> str:
    if conn is None:
        return "unbounded"
    return str(conn)


@dataclass(frozen=True)
class ConnectivityReport:
    conn_h: Connectivity
    pi1: Pi1Status
    certified_topological: bool

    @property
    def pi1_unverified(self) -> bool:
        return self.pi1 == Pi1Status.UNKNOWN and conn_value(self.conn_h) >= 1

    @classmethod
    def build(cls, conn_h: Connectivity, pi1: Pi1Status) -> "ConnectivityReport":
        if conn_h == CONTRACTIBLE:
            return cls(conn_h=conn_h, pi1=Pi1Status.TRIVIAL, certified_topological=True)
        certified = conn_value(conn_h) <= 0 or pi1 == Pi1Status.TRIVIAL
        return cls(conn_h=conn_h, pi1=pi1, certified_topological=certified)

    def to_json(self) -> dict[str, object]:
        return {
            "conn_h": self.conn_h,
            "pi1": self.pi1.value,
            "certified_topological": self.certified_topological,
            "pi1_unverified": self.pi1_unverified,
        }
