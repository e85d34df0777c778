import importlib
import json
import logging
import os
from typing import Callable, Dict, List, Optional

from modules.config import load_settings


class SuiteRegistry:
    _instance = None

    def __init__(self):
        self.suites = {}  # Map[suite_name, suite_metadata]
        self.manifests = {}  # Map[manifest_id, manifest]
        self.logger = logging.getLogger("SuiteRegistry")
        settings = load_settings()
        suites_dir = settings.get("suites_dir", os.path.join("data", "suites"))
        if not os.path.isabs(suites_dir):
            root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
            suites_dir = os.path.join(root, suites_dir)
        self.suites_dir = suites_dir

    @classmethod
    def get_instance(cls):
        if cls._instance is None:
            cls._instance = cls()
            cls._instance.scan()
        return cls._instance

    def scan(self, directory: str = None):
        """Loads every *.json suite manifest in the directory, in file name order."""
        directory = directory or self.suites_dir
        if not os.path.exists(directory):
            self.logger.warning(f"Suite directory not found: {directory}")
            return

        for name in sorted(os.listdir(directory)):
            if not name.endswith(".json"):
                continue
            path = os.path.join(directory, name)
            try:
                with open(path, "r") as f:
                    manifest = json.load(f)
                if self._validate_manifest(manifest):
                    self.manifests[manifest["id"]] = manifest
                    self._register_from_manifest(manifest)
                    self.logger.info(f"Loaded suite manifest: {manifest['id']} ({len(manifest['suites'])} suites)")
                else:
                    self.logger.warning(f"Invalid suite manifest in {path}")
            except (OSError, json.JSONDecodeError) as e:
                self.logger.error(f"Error loading suite manifest {name}: {e}")

    def _validate_manifest(self, manifest: Dict) -> bool:
        required_fields = ["id", "name", "version", "suites"]
        for field in required_fields:
            if field not in manifest:
                return False
        return all("name" in s and "entry" in s for s in manifest["suites"])

    def _register_from_manifest(self, manifest: Dict):
        for suite in manifest["suites"]:
            self.suites[suite["name"]] = {
                "manifest_id": manifest["id"],
                "entry": suite["entry"],
                "description": suite.get("description", ""),
                "max_radius": suite.get("max_radius"),
            }

    def register(self, name: str, func: Callable, description: str = "", max_radius: Optional[int] = None):
        """Registers a callable directly, bypassing manifests."""
        self.suites[name] = {
            "manifest_id": None,
            "entry": func,
            "description": description,
            "max_radius": max_radius,
        }

    def resolve(self, suite_def: Dict) -> Callable:
        entry = suite_def["entry"]
        if callable(entry):
            return entry
        module_name, _, attr = entry.partition(":")
        return getattr(importlib.import_module(module_name), attr)

    def get_suite(self, name: str) -> Optional[Dict]:
        return self.suites.get(name)

    def get_all_suites(self) -> Dict:
        return self.suites

    def names(self) -> List[str]:
        return list(self.suites)
