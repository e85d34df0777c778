import sys
import os
import logging

# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from modules.config import RunConfig
from modules.coxeter import PreconditionError
from modules.suites import SuiteExecutor, SuiteRegistry, overall_status, worker_count
from modules.utils import CheckResult
from tests.sample_graphs import free

# Configure logging
logging.basicConfig(level=logging.INFO)


def _failing(graph, config):
    result = CheckResult("always-fails")
    result.record(False, reason="forced")
    return [result]


def _raising(graph, config):
    raise PreconditionError("forced precondition")


def _radius_echo(graph, config):
    return [CheckResult("radius-echo", {"N": config.ball_radius})]


def test_registry():
    print("[TEST] Scanning suite manifests...")
    registry = SuiteRegistry()
    registry.scan()
    names = registry.names()
    print(f"[TEST] Found suites: {names}")
    assert len(names) == 15
    for name in ("hecke-relations", "kraus", "growth", "cutdown", "ccap"):
        assert name in names, name
    assert registry.get_suite("cutdown")["max_radius"] == 4
    assert callable(registry.resolve(registry.get_suite("kraus")))
    assert not registry._validate_manifest({"id": "broken", "suites": []})
    print("[PASS] Registry verified.")


def test_executor_statuses():
    print("[TEST] Executing suites...")
    registry = SuiteRegistry()
    registry.scan()
    registry.register("always-fails", _failing)
    registry.register("raises", _raising)
    registry.register("radius-echo", _radius_echo, max_radius=1)
    executor = SuiteExecutor(registry, max_workers=2)
    config = RunConfig.from_settings(ball_radius=2)
    g = free(3)

    outcome = executor.execute("kraus", g, config)
    print(f"[TEST] Result: {outcome['status']} in {outcome['elapsed']}s")
    assert outcome["status"] == "success"
    assert outcome["results"][0]["lemma"] == "kraus"
    assert outcome["results"][0]["cases_checked"] == 198

    assert executor.execute("missing", g, config)["status"] == "error"
    assert executor.execute("always-fails", g, config)["status"] == "failure"
    raised = executor.execute("raises", g, config)
    assert raised["status"] == "error" and "forced precondition" in raised["error"]

    echo = executor.execute("radius-echo", g, config)
    assert echo["results"][0]["parameters"]["N"] == 1
    print("[PASS] Statuses verified.")


def test_parallel_run():
    print("[TEST] Parallel run keeps order...")
    registry = SuiteRegistry()
    registry.scan()
    executor = SuiteExecutor(registry, max_workers=3)
    config = RunConfig.from_settings(ball_radius=2)
    names = ["kraus", "growth", "hecke-relations"]
    outcomes = executor.run(names, free(2), config)
    assert [o["suite"] for o in outcomes] == names
    assert overall_status(outcomes) == "success"

    assert overall_status([{"status": "success"}, {"status": "failure"}]) == "failure"
    assert overall_status([{"status": "failure"}, {"status": "error"}]) == "error"
    assert worker_count({"workers": {"max_workers": 1}}) == 1
    assert worker_count() >= 1
    print("[PASS] Parallel run verified.")


if __name__ == "__main__":
    test_registry()
    test_executor_statuses()
    test_parallel_run()
