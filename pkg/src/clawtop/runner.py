from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat
import traceback

from .bounds import BoundKind
from .config import RunConfig
from .ensemble import EnsembleGraph, build_ensemble
from .errors import InputError, ResourceCapError
from .graph import Graph, find_induced_claw, is_claw_free
from .harness import (
    ERROR,
    FAIL,
    PASS,
    SKIPPED,
    VerificationRecord,
    certify_main_theorem,
    check_basic_properties,
    check_claw_free_inequalities,
    check_claw_oracle,
    check_degree_one_lemma,
    check_field_coefficients,
    check_main_theorem_cover,
    check_outer_neighborhoods,
    check_random_fold,
    check_random_matrix,
    check_two_neighbor_lemma,
    max_certifiable_n,
    simplicial_vertices,
    two_neighbor_hypotheses,
    verify_bound,
    verify_C_theorem,
    verify_L_bound,
    verify_L_recursion,
    verify_wedge_decomposition,
)
from .logger import Logger
from .time_utils import Stopwatch


SUITES = (
    "bounds",
    "neighborhood",
    "decomposition",
    "wedge",
    "L-recursion",
    "C-theorem",
    "collapse",
    "snf",
    "properties",
    "lemmas",
)
ALL_SUITES = "all"

# alternate suite names accepted everywhere a suite name is
SUITE_ALIASES = {
    "lemma31": "neighborhood",
    "thm28": "decomposition",
}

# suites that walk a graph ensemble, and whether they need claw-free graphs
GRAPH_SUITES = {
    "bounds": False,
    "neighborhood": True,
    "decomposition": True,
    "wedge": False,
    "properties": False,
    "lemmas": False,
}

DEFAULT_L_KS = (2, 3, 4)
DEFAULT_L_N_MAX = 18
DEFAULT_C_RANGES = ((2, 6, 15), (3, 12, 16))
TRIALS = {
    "default": {"collapse": 1000, "snf": 200},
    "quick": {"collapse": 100, "snf": 40},
}


@dataclass(frozen=True)
class SuiteRequest:
    suite: str
    ensemble: str = "default"
    # explicit graphs replace the ensemble
    graphs: tuple[EnsembleGraph, ...] = ()
    kind: str | None = None
    ks: tuple[int, ...] = ()
    n_min: int | None = None
    n_max: int | None = None
    trials: int | None = None


@dataclass(frozen=True)
class Task:
    suite: str
    graph_id: str
    graph: Graph | None = None
    params: tuple[int, ...] = ()
    kind: str | None = None


@dataclass
class SuiteRun:
    suite: str
    records: list[VerificationRecord] = field(default_factory=list)
    duration_seconds: float = 0.0

    def count(self, status: str) -> int:
        return sum(1 for r in self.records if r.status == status)

    @property
    def failures(self) -> int:
        return self.count(FAIL) + self.count(ERROR)

    @property
    def exit_code(self) -> int:
        if self.failures:
            return 1
        if self.count(SKIPPED):
            return 3
        return 0

    def summary(self) -> dict[str, object]:
        return {
            "summary": True,
            "suite": self.suite,
            "records": len(self.records),
            "pass": self.count(PASS),
            "fail": self.count(FAIL),
            "error": self.count(ERROR),
            "skipped": self.count(SKIPPED),
        }


def _suite_names(suite: str) -> list[str]:
    suite = SUITE_ALIASES.get(suite, suite)
    if suite == ALL_SUITES:
        return list(SUITES)
    if suite not in SUITES:
        raise InputError(
            f"unknown suite {suite!r}; expected one of {', '.join(SUITES)} or {ALL_SUITES}"
        )
    return [suite]


def _graph_tasks(
    suite: str, graphs: list[EnsembleGraph], req: SuiteRequest, explicit: bool
) -> list[Task]:
    needs_claw_free = GRAPH_SUITES[suite] or (suite == "bounds" and req.kind == "claw_free")
    tasks: list[Task] = []
    for e in graphs:
        g = e.graph
        if g.n == 0:
            continue
        if needs_claw_free and not is_claw_free(g):
            if explicit:
                raise InputError(
                    f"{e.graph_id} is not claw-free (claw {find_induced_claw(g)}); "
                    f"suite {suite} needs a claw-free graph"
                )
            continue
        if suite == "wedge" and not simplicial_vertices(g):
            if explicit:
                raise InputError(f"{e.graph_id} has no vertex with a complete neighbourhood")
            continue
        tasks.append(Task(suite=suite, graph_id=e.graph_id, graph=g, kind=req.kind))
    return tasks


def _l_tasks(req: SuiteRequest) -> list[Task]:
    ks = req.ks or DEFAULT_L_KS
    lo = max(1, req.n_min or 1)
    hi = req.n_max if req.n_max is not None else DEFAULT_L_N_MAX
    return [
        Task(suite="L-recursion", graph_id=f"L({n},{k})", params=(n, k))
        for k in ks
        for n in range(lo, hi + 1)
    ]


def _c_tasks(req: SuiteRequest) -> list[Task]:
    if req.ks:
        ranges = []
        for k in req.ks:
            lo = max(6 * (k - 1), 2 * k - 1, 1, req.n_min or 0)
            hi = req.n_max if req.n_max is not None else 6 * (k - 1) + 9
            ranges.append((k, lo, hi))
    else:
        ranges = [
            (k, max(lo, req.n_min or 0), min(hi, req.n_max) if req.n_max is not None else hi)
            for k, lo, hi in DEFAULT_C_RANGES
        ]
    return [
        Task(suite="C-theorem", graph_id=f"C({n},{k})", params=(n, k))
        for k, lo, hi in ranges
        for n in range(lo, hi + 1)
    ]


def _trial_tasks(suite: str, req: SuiteRequest) -> list[Task]:
    count = req.trials
    if count is None:
        count = TRIALS.get(req.ensemble, TRIALS["default"])[suite]
    prefix = "fold" if suite == "collapse" else "snf"
    return [
        Task(suite=suite, graph_id=f"{prefix}-{i:04d}", params=(i,)) for i in range(count)
    ]


def plan_tasks(req: SuiteRequest, cfg: RunConfig) -> list[Task]:
    """Expand a request into independent tasks; invalid explicit input raises."""

    if req.kind is not None and req.kind not in {"general", "claw_free"}:
        raise InputError(f"--kind must be general or claw_free, got {req.kind!r}")
    names = _suite_names(req.suite)
    graphs: list[EnsembleGraph] | None = None
    tasks: list[Task] = []
    for name in names:
        if name in GRAPH_SUITES:
            if graphs is None:
                graphs = list(req.graphs) or build_ensemble(
                    req.ensemble, seed=cfg.seed, retry_cap=cfg.retry_cap
                )
            tasks.extend(_graph_tasks(name, graphs, req, explicit=bool(req.graphs)))
        elif name == "L-recursion":
            tasks.extend(_l_tasks(req))
        elif name == "C-theorem":
            tasks.extend(_c_tasks(req))
        else:
            tasks.extend(_trial_tasks(name, req))
    return tasks


def run_task(task: Task, cfg: RunConfig) -> list[VerificationRecord]:
    g = task.graph
    gid = task.graph_id
    if task.suite == "L-recursion":
        n, k = task.params
        return [verify_L_recursion(n, k, cfg), verify_L_bound(n, k, cfg)]
    if task.suite == "C-theorem":
        n, k = task.params
        return [verify_C_theorem(n, k, cfg)]
    if task.suite == "collapse":
        return [check_random_fold(task.params[0], cfg)]
    if task.suite == "snf":
        return [check_random_matrix(task.params[0], cfg)]

    assert g is not None
    if task.suite == "bounds":
        tags = [task.kind] if task.kind else ["general"] + (["claw_free"] if is_claw_free(g) else [])
        return [verify_bound(g, BoundKind.for_graph(t, g), cfg, gid) for t in tags]
    if task.suite == "neighborhood":
        return [check_claw_free_inequalities(g, gid)]
    if task.suite == "decomposition":
        out: list[VerificationRecord] = []
        for u in g.vertices:
            n = max_certifiable_n(g, u, cfg)
            out.append(certify_main_theorem(g, u, n, cfg, gid))
            out.append(check_main_theorem_cover(g, u, cfg, gid))
        return out
    if task.suite == "wedge":
        return [verify_wedge_decomposition(g, u, cfg, gid) for u in simplicial_vertices(g)]
    if task.suite == "properties":
        out = [
            check_basic_properties(g, cfg, gid),
            check_claw_oracle(g, gid),
            check_field_coefficients(g, cfg, gid),
        ]
        if is_claw_free(g):
            out.append(check_outer_neighborhoods(g, gid))
        return out
    if task.suite == "lemmas":
        out = [check_degree_one_lemma(g, u, cfg, gid) for u in g.vertices if g.degree(u) == 1]
        out.extend(
            check_two_neighbor_lemma(g, u, cfg, gid)
            for u in g.vertices
            if two_neighbor_hypotheses(g, u)
        )
        return out
    raise InputError(f"unknown suite {task.suite!r}")


def _stub(task: Task, status: str, error: str) -> VerificationRecord:
    g = task.graph
    return VerificationRecord(
        graph_id=task.graph_id,
        check=task.suite,
        kind=task.kind or task.suite,
        n=g.n if g is not None else (task.params[0] if task.params else 0),
        d=max((len(a) for a in g.adj), default=0) if g is not None else 0,
        claimed=None,
        measured=None,
        status=status,
        detail={"error": error},
    )


def execute_task(task: Task, cfg: RunConfig) -> list[VerificationRecord]:
    """Run one task; caps become a skipped record, anything else an error record."""

    try:
        return run_task(task, cfg)
    except ResourceCapError as e:
        return [_stub(task, SKIPPED, str(e))]
    except Exception as e:  # noqa: BLE001
        tb = traceback.format_exc(limit=5)
        return [_stub(task, ERROR, f"{e}\n{tb}"[:4000])]


def run_suite(
    cfg: RunConfig, req: SuiteRequest, log: Logger | None = None
) -> SuiteRun:
    log = log or Logger(enabled=True, json_mode=cfg.log_json, level=cfg.log_level)
    log = log.bind(suite=req.suite)
    sw = Stopwatch()
    tasks = plan_tasks(req, cfg)
    workers = min(cfg.worker_count, max(1, len(tasks)))
    log.info(
        "suite.start",
        ensemble=None if req.graphs else req.ensemble,
        tasks=len(tasks),
        workers=workers,
        seed=cfg.seed,
    )

    records: list[VerificationRecord] = []
    if workers > 1:
        chunk = max(1, len(tasks) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for batch in pool.map(execute_task, tasks, repeat(cfg), chunksize=chunk):
                records.extend(batch)
    else:
        for task in tasks:
            records.extend(execute_task(task, cfg))

    records.sort(key=VerificationRecord.sort_key)
    for r in records:
        if r.status == FAIL:
            log.warn(
                "record.fail",
                graph_id=r.graph_id,
                check=r.check,
                claimed=r.claimed,
                measured=r.measured,
            )
        elif r.status == ERROR:
            first_line = (str(r.detail.get("error", "")).splitlines() or [""])[0]
            log.error("record.error", graph_id=r.graph_id, check=r.check, error=first_line)
        elif r.status == SKIPPED:
            log.warn(
                "record.skipped",
                graph_id=r.graph_id,
                check=r.check,
                reason=r.detail.get("error"),
            )

    run = SuiteRun(suite=req.suite, records=records, duration_seconds=sw.elapsed_seconds())
    log.info(
        "suite.completed",
        duration_seconds=round(run.duration_seconds, 3),
        **{k: v for k, v in run.summary().items() if k not in {"summary", "suite"}},
    )
    return run
