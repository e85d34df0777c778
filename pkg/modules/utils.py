import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class CheckResult:
    """
    Outcome of an exhaustive identity check. Truthy iff no failures were recorded.
    Failures keep at most `max_failures` entries but are always counted.
    """
    lemma: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    cases_checked: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    failure_count: int = 0
    max_failures: int = 20

    def record(self, ok: bool, **details):
        self.cases_checked += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < self.max_failures:
                self.failures.append({k: to_jsonable(v) for k, v in details.items()})

    def merge(self, other: "CheckResult"):
        self.cases_checked += other.cases_checked
        self.failure_count += other.failure_count
        room = self.max_failures - len(self.failures)
        if room > 0:
            self.failures.extend(other.failures[:room])

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self, graph: str = None) -> Dict[str, Any]:
        return {
            "lemma": self.lemma,
            "graph": graph,
            "parameters": {k: to_jsonable(v) for k, v in self.parameters.items()},
            "cases_checked": self.cases_checked,
            "failure_count": self.failure_count,
            "failures": self.failures,
        }


def to_jsonable(value):
    """Renders words, cliques and scalars the way the text formats print them."""
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    if isinstance(value, float):
        return "inf" if math.isinf(value) else value
    if isinstance(value, (frozenset, set)):
        return sorted(str(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    return str(value)


def dump_json(data) -> str:
    return json.dumps(to_jsonable(data), indent=2, ensure_ascii=False)
