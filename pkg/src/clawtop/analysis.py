from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cache import HomologyCache
from .collapse import FoldRecord, free_face_collapse, greedy_fold_reduce
from .complex import (
    SimplicialComplex,
    cone_apex,
    independence_complex,
    independent_set_counts,
)
from .config import RunConfig
from .connectivity import (
    CONTRACTIBLE,
    Connectivity,
    ConnectivityReport,
    homological_connectivity,
)
from .fundamental_group import Pi1Status, pi1_status
from .graph import Graph, is_claw_free, max_degree
from .homology import HomologyProfile, reduced_homology


_DEFAULT = RunConfig()


@dataclass(frozen=True)
class Measurement:
    profile: HomologyProfile
    report: ConnectivityReport
    collapsed_f_vector: tuple[int, ...]

    @property
    def conn(self) -> Connectivity:
        return self.report.conn_h

    @property
    def pi1(self) -> Pi1Status:
        return self.report.pi1


def _homology(
    cx: SimplicialComplex, cfg: RunConfig, cache: HomologyCache | None
) -> HomologyProfile:
    if cache is None:
        return reduced_homology(cx, max_faces=cfg.cap_faces)
    key = cx.canonical_key()
    hit = cache.get(key)
    if hit is not None:
        return hit
    profile = reduced_homology(cx, max_faces=cfg.cap_faces)
    cache.put(key, profile, cx.face_count())
    return profile


def measure_complex(
    cx: SimplicialComplex,
    cfg: RunConfig = _DEFAULT,
    want_pi1: bool = True,
    cache: HomologyCache | None = None,
) -> Measurement:
    """Free-face collapse, then homology, connectivity and the pi1 status."""

    if cx.is_empty:
        return Measurement(
            profile=HomologyProfile.empty_space(),
            report=ConnectivityReport.build(-2, Pi1Status.UNKNOWN),
            collapsed_f_vector=(),
        )
    if cone_apex(cx) is not None:
        return Measurement(
            profile=HomologyProfile(),
            report=ConnectivityReport.build(CONTRACTIBLE, Pi1Status.TRIVIAL),
            collapsed_f_vector=(1,),
        )

    core = free_face_collapse(cx)
    profile = _homology(core, cfg, cache)
    conn = homological_connectivity(core, profile)

    if conn == CONTRACTIBLE:
        pi1 = Pi1Status.TRIVIAL
    elif not profile.group(1).is_zero:
        pi1 = Pi1Status.NONTRIVIAL
    elif conn == -1 or not want_pi1:
        pi1 = Pi1Status.UNKNOWN
    else:
        pi1 = pi1_status(
            core,
            homology=profile,
            max_steps=cfg.tietze_budget,
            max_relator_length=cfg.tietze_relator_cap,
        )
    return Measurement(
        profile=profile,
        report=ConnectivityReport.build(conn, pi1),
        collapsed_f_vector=tuple(core.f_vector()),
    )


@lru_cache(maxsize=65536)
def measure_graph(
    g: Graph, cfg: RunConfig = _DEFAULT, want_pi1: bool = False
) -> Measurement:
    """Brute-force measurement of Ind(G), memoized per process."""

    cx = independence_complex(g, max_vertices=cfg.cap_vertices, max_faces=cfg.cap_faces)
    return measure_complex(cx, cfg, want_pi1=want_pi1)


def graph_connectivity(g: Graph, cfg: RunConfig = _DEFAULT) -> Connectivity:
    return measure_graph(g, cfg).conn


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    edges: int
    max_degree: int
    claw_free: bool
    folds: tuple[FoldRecord, ...]
    reduced_vertices: int
    f_vector: tuple[int, ...]
    reduced_f_vector: tuple[int, ...]
    measurement: Measurement

    def to_json(self) -> dict[str, object]:
        return {
            "graph": {
                "n": self.n,
                "edges": self.edges,
                "max_degree": self.max_degree,
                "claw_free": self.claw_free,
            },
            "folds": [f.to_json() for f in self.folds],
            "reduced_vertices": self.reduced_vertices,
            "f_vector": list(self.f_vector),
            "reduced_f_vector": list(self.reduced_f_vector),
            "collapsed_f_vector": list(self.measurement.collapsed_f_vector),
            "homology": self.measurement.profile.to_json(),
            "connectivity": self.measurement.report.to_json(),
        }


def analyze_graph(
    g: Graph,
    cfg: RunConfig = _DEFAULT,
    cache: HomologyCache | None = None,
) -> AnalysisReport:
    """Fold-reduce, build Ind, collapse free faces, then measure."""

    reduced, folds = greedy_fold_reduce(g)
    cx = independence_complex(
        reduced, max_vertices=cfg.cap_vertices, max_faces=cfg.cap_faces
    )
    measurement = measure_complex(cx, cfg, want_pi1=True, cache=cache)
    return AnalysisReport(
        n=g.n,
        edges=g.edge_count,
        max_degree=max_degree(g),
        claw_free=is_claw_free(g),
        folds=tuple(folds),
        reduced_vertices=reduced.n,
        f_vector=tuple(independent_set_counts(g)),
        reduced_f_vector=tuple(cx.f_vector()),
        measurement=measurement,
    )
