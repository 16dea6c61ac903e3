from __future__ import annotations

import pytest

from clawtop.config import RunConfig
from clawtop.ensemble import single_graph
from clawtop.errors import InputError
from clawtop.families import cycle_graph, path_graph, star_graph
from clawtop.harness import ERROR, PASS, SKIPPED
from clawtop.logger import silent
from clawtop.runner import SuiteRequest, Task, execute_task, plan_tasks, run_suite


CFG = RunConfig(command="verify", jobs=1)


def _run(req: SuiteRequest, cfg: RunConfig = CFG):
    return run_suite(cfg, req, silent())


def test_interval_suite() -> None:
    run = _run(SuiteRequest(suite="L-recursion", ks=(2,), n_max=8))
    assert len(run.records) == 16
    assert run.count(PASS) == 16
    assert run.exit_code == 0
    assert run.summary() == {
        "summary": True,
        "suite": "L-recursion",
        "records": 16,
        "pass": 16,
        "fail": 0,
        "error": 0,
        "skipped": 0,
    }
    ids = [r.graph_id for r in run.records]
    assert ids == sorted(ids)


def test_circular_suite() -> None:
    run = _run(SuiteRequest(suite="C-theorem", ks=(2,), n_max=9))
    assert [r.graph_id for r in run.records] == ["C(6,2)", "C(7,2)", "C(8,2)", "C(9,2)"]
    assert run.exit_code == 0


def test_caps_turn_into_skipped_records() -> None:
    capped = RunConfig(command="verify", jobs=1, cap_vertices=5)
    run = _run(SuiteRequest(suite="C-theorem", ks=(2,), n_max=7), capped)
    assert run.count(SKIPPED) == 2
    assert run.exit_code == 3
    assert "cap" in run.records[0].detail["error"]


def test_unexpected_errors_become_error_records() -> None:
    (rec,) = execute_task(Task(suite="bogus", graph_id="x", graph=cycle_graph(3)), CFG)
    assert rec.status == ERROR
    assert "unknown suite" in rec.detail["error"]


def test_trial_suites() -> None:
    for suite in ("collapse", "snf"):
        run = _run(SuiteRequest(suite=suite, trials=5))
        assert len(run.records) == 5
        assert run.exit_code == 0


def test_explicit_graph_suites() -> None:
    c6 = tuple(single_graph(cycle_graph(6), "c6"))
    thm = _run(SuiteRequest(suite="decomposition", graphs=c6))
    assert len(thm.records) == 12
    assert thm.exit_code == 0

    bounds = _run(SuiteRequest(suite="bounds", graphs=c6))
    assert [r.check for r in bounds.records] == ["bound:claw_free", "bound:general"]

    lemmas = _run(SuiteRequest(suite="lemmas", graphs=tuple(single_graph(path_graph(5), "p5"))))
    assert lemmas.exit_code == 0
    assert len(lemmas.records) == 5

    props = _run(SuiteRequest(suite="properties", graphs=c6))
    assert [r.check for r in props.records] == [
        "basic-properties",
        "claw-oracle",
        "field-betti",
        "outer-neighborhoods",
    ]
    assert props.exit_code == 0

    aliased = plan_tasks(SuiteRequest(suite="thm28", graphs=c6), CFG)
    assert [t.suite for t in aliased] == ["decomposition"]


def test_invalid_requests() -> None:
    star = tuple(single_graph(star_graph(3), "claw"))
    with pytest.raises(InputError):
        plan_tasks(SuiteRequest(suite="bounds", graphs=star, kind="claw_free"), CFG)
    with pytest.raises(InputError):
        plan_tasks(SuiteRequest(suite="neighborhood", graphs=star), CFG)
    with pytest.raises(InputError):
        plan_tasks(SuiteRequest(suite="wedge", graphs=tuple(single_graph(cycle_graph(6)))), CFG)
    with pytest.raises(InputError):
        plan_tasks(SuiteRequest(suite="bounds", kind="tight"), CFG)
    with pytest.raises(InputError):
        plan_tasks(SuiteRequest(suite="everything"), CFG)


def test_runs_are_deterministic_and_parallel_safe() -> None:
    req = SuiteRequest(suite="collapse", trials=6)
    first = [r.to_json() for r in _run(req).records]
    again = [r.to_json() for r in _run(req).records]
    parallel = [r.to_json() for r in _run(req, RunConfig(command="verify", jobs=2)).records]
    assert first == again == parallel


@pytest.mark.slow
def test_quick_ensemble_passes_every_suite() -> None:
    run = _run(SuiteRequest(suite="all", ensemble="quick"), RunConfig(command="verify"))
    assert run.failures == 0
