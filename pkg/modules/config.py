import json
import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger("Config")

FORMATS = ("json", "csv", "text")

DEFAULT_SETTINGS = {
    "defaults": {"q": 1.0, "ball_radius": 4, "tol": 1e-9, "format": "json"},
    "limits": {"max_ball": 2000000, "ratio_terms": 200, "power_iterations": 5000, "dense_svd_limit": 4000},
    "workers": {"max_workers": 4},
    "graphs_dir": os.path.join("data", "graphs"),
    "suites_dir": os.path.join("data", "suites"),
}


def _base_dir():
    # This file lives in project_root/modules/config.py
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def load_settings():
    """
    Loads settings from data/settings.json relative to the project root,
    then applies environment overrides (a .env file is honoured).
    """
    load_dotenv()
    settings_path = os.path.join(_base_dir(), "data", "settings.json")

    settings = json.loads(json.dumps(DEFAULT_SETTINGS))
    if os.path.exists(settings_path):
        with open(settings_path, "r") as f:
            stored = json.load(f)
        for key, value in stored.items():
            if isinstance(value, dict) and isinstance(settings.get(key), dict):
                settings[key].update(value)
            else:
                settings[key] = value

    override = os.environ.get("HECKE_MAX_BALL")
    if override:
        try:
            settings["limits"]["max_ball"] = int(override)
        except ValueError:
            logger.warning(f"Ignoring non-integer HECKE_MAX_BALL={override!r}")
    return settings


@lru_cache(maxsize=1)
def cached_settings():
    """Settings loaded once per process; reload_settings() drops the copy."""
    return load_settings()


def reload_settings():
    cached_settings.cache_clear()
    return cached_settings()


def get_ball_cap(settings=None):
    if settings is None:
        settings = cached_settings()
    return int(settings["limits"]["max_ball"])


def get_limit(name, settings=None):
    if settings is None:
        settings = cached_settings()
    return settings["limits"][name]


def resolve_graph_path(name_or_path, settings=None):
    """
    A bare name such as 'free3' resolves to data/graphs/free3.json;
    anything that exists on disk is used as given.
    """
    if os.path.exists(name_or_path):
        return name_or_path
    if settings is None:
        settings = load_settings()
    graphs_dir = settings.get("graphs_dir", DEFAULT_SETTINGS["graphs_dir"])
    if not os.path.isabs(graphs_dir):
        graphs_dir = os.path.join(_base_dir(), graphs_dir)
    candidate = os.path.join(graphs_dir, name_or_path)
    if not candidate.endswith(".json"):
        candidate += ".json"
    return candidate


def load_graph_file(name_or_path, settings=None):
    """
    Parses a graph description {"generators": [...], "edges": [[a, b], ...]}.
    """
    from modules.coxeter import CoxeterError, CoxeterGraph

    path = resolve_graph_path(name_or_path, settings)
    if not os.path.exists(path):
        raise CoxeterError(f"Graph file not found: {name_or_path}")
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise CoxeterError(f"Graph file {path} is not valid JSON: {e}")
    return CoxeterGraph.from_dict(data)


def list_graph_files(settings=None):
    if settings is None:
        settings = load_settings()
    graphs_dir = settings.get("graphs_dir", DEFAULT_SETTINGS["graphs_dir"])
    if not os.path.isabs(graphs_dir):
        graphs_dir = os.path.join(_base_dir(), graphs_dir)
    if not os.path.exists(graphs_dir):
        return []
    return sorted(name[:-5] for name in os.listdir(graphs_dir) if name.endswith(".json"))


@dataclass
class RunConfig:
    """One CLI invocation's parameters, defaulted from settings."""
    graph_path: str = "free3"
    q: float = 1.0
    ball_radius: int = 4
    tol: float = 1e-9
    output: Optional[str] = None
    format: str = "json"
    variant: str = "free3"
    p: Optional[float] = None
    word: Optional[str] = None
    d: int = 3
    quiet: bool = False

    @classmethod
    def from_settings(cls, settings=None, **overrides) -> "RunConfig":
        if settings is None:
            settings = load_settings()
        defaults = settings.get("defaults", {})
        config = cls(
            q=float(defaults.get("q", 1.0)),
            ball_radius=int(defaults.get("ball_radius", 4)),
            tol=float(defaults.get("tol", 1e-9)),
            format=defaults.get("format", "json"),
        )
        for key, value in overrides.items():
            if value is not None:
                setattr(config, key, value)
        config.validate()
        return config

    def validate(self):
        from modules.coxeter import CoxeterError

        if self.q <= 0:
            raise CoxeterError(f"q must be positive, got {self.q}")
        if self.ball_radius < 0:
            raise CoxeterError(f"N must be nonnegative, got {self.ball_radius}")
        if self.tol <= 0:
            raise CoxeterError(f"tol must be positive, got {self.tol}")
        if self.format not in FORMATS:
            raise CoxeterError(f"Unknown format {self.format!r}, expected one of {FORMATS}")
        if self.p is not None and self.p < 0:
            raise CoxeterError(f"p must be nonnegative, got {self.p}")
