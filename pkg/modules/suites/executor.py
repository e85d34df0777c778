import dataclasses
import logging
import time
import traceback
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List

import psutil

from modules.config import RunConfig, load_settings
from modules.coxeter import CoxeterError, CoxeterGraph

from .registry import SuiteRegistry


def worker_count(settings=None) -> int:
    if settings is None:
        settings = load_settings()
    configured = int(settings.get("workers", {}).get("max_workers", 4))
    physical = psutil.cpu_count(logical=False) or 1
    return max(1, min(configured, physical))


class SuiteExecutor:
    def __init__(self, registry: SuiteRegistry = None, max_workers: int = None):
        self.logger = logging.getLogger("SuiteExecutor")
        self.registry = registry or SuiteRegistry.get_instance()
        self.max_workers = max_workers or worker_count()

    def _effective_config(self, suite_def: Dict, config: RunConfig) -> RunConfig:
        cap = suite_def.get("max_radius")
        if cap is not None and config.ball_radius > cap:
            return dataclasses.replace(config, ball_radius=cap)
        return config

    def execute(self, name: str, graph: CoxeterGraph, config: RunConfig) -> Dict:
        """
        Runs one suite.

        Returns:
            Dict containing 'suite', 'status' (success | failure | error),
            'results' (one entry per identity checked), 'elapsed' and 'error'.
        """
        suite_def = self.registry.get_suite(name)
        if suite_def is None:
            return {"suite": name, "status": "error", "results": [], "error": f"Unknown suite: {name}"}

        effective = self._effective_config(suite_def, config)
        self.logger.info(f"Running {name} on {graph} (N={effective.ball_radius})")
        started = time.perf_counter()
        try:
            func = self.registry.resolve(suite_def)
            checks = func(graph, effective)
        except (CoxeterError, ImportError, AttributeError) as e:
            self.logger.error(f"Suite {name} failed: {e}")
            return {"suite": name, "status": "error", "results": [], "error": str(e)}
        except Exception as e:
            self.logger.error(f"Suite {name} crashed: {traceback.format_exc()}")
            return {"suite": name, "status": "error", "results": [], "error": str(e)}

        elapsed = time.perf_counter() - started
        failed = [c.lemma for c in checks if not c.passed]
        status = "failure" if failed else "success"
        if failed:
            self.logger.warning(f"Suite {name}: failures in {', '.join(failed)}")
        else:
            self.logger.info(f"Suite {name}: {sum(c.cases_checked for c in checks)} cases passed in {elapsed:.2f}s")
        return {
            "suite": name,
            "status": status,
            "results": [c.to_dict(str(graph)) for c in checks],
            "elapsed": round(elapsed, 3),
            "error": None,
        }

    def run(self, names: List[str], graph: CoxeterGraph, config: RunConfig) -> List[Dict]:
        """Runs suites in parallel; results come back in the order of `names`."""
        if len(names) <= 1 or self.max_workers == 1:
            return [self.execute(name, graph, config) for name in names]
        with ThreadPoolExecutor(max_workers=self.max_workers, thread_name_prefix="SuiteWorker") as pool:
            futures = [pool.submit(self.execute, name, graph, config) for name in names]
            return [f.result() for f in futures]

    def run_all(self, graph: CoxeterGraph, config: RunConfig) -> List[Dict]:
        return self.run(self.registry.names(), graph, config)


def overall_status(outcomes: List[Dict]) -> str:
    if any(o["status"] == "error" for o in outcomes):
        return "error"
    if any(o["status"] == "failure" for o in outcomes):
        return "failure"
    return "success"
