"""
Named verification suites: a manifest-driven registry and a threaded executor.
"""
from .registry import SuiteRegistry
from .executor import SuiteExecutor, overall_status, worker_count
