import json
import logging
import os
from typing import Dict, Optional

logger = logging.getLogger(__name__)

# Default configuration for verification runs.
DEFAULT_CONFIG = {
    "seed": 20210,
    "jobs": 1,
    "perm_samples": 5,
    "coeff_samples": 5,
    "nf_samples": 1000,
    "ceilings": {"A": 6, "B": 4, "C": 4, "D": 5},
    "output": "table",
}


def default_config_path() -> str:
    return os.environ.get("HESSBERG_CONFIG") or os.path.expanduser("~/.hessberg/config.json")


class Settings:
    """Simple settings manager that stores configuration in JSON."""

    def __init__(self, path: Optional[str] = None) -> None:
        self.config_path = path or default_config_path()
        self._config: dict = {}
        self.load()

    def load(self) -> None:
        """Load configuration from disk; falls back to defaults."""
        if os.path.exists(self.config_path):
            try:
                with open(self.config_path, "r", encoding="utf-8") as f:
                    self._config = json.load(f)
            except (OSError, ValueError):
                logger.warning("config %s unreadable, using defaults", self.config_path)
                self._config = json.loads(json.dumps(DEFAULT_CONFIG))
        else:
            self._config = json.loads(json.dumps(DEFAULT_CONFIG))

        # Backfill missing keys
        for key, value in DEFAULT_CONFIG.items():
            if key not in self._config:
                self._config[key] = json.loads(json.dumps(value))
        for family, ceiling in DEFAULT_CONFIG["ceilings"].items():
            self._config["ceilings"].setdefault(family, ceiling)

    def save(self) -> None:
        """Persist current configuration to disk (best effort)."""
        try:
            cfg_dir = os.path.dirname(self.config_path)
            if cfg_dir:
                os.makedirs(cfg_dir, exist_ok=True)
            with open(self.config_path, "w", encoding="utf-8") as f:
                json.dump(self._config, f, indent=2)
        except OSError as e:
            logger.warning("could not save config to %s: %s", self.config_path, e)

    @property
    def seed(self) -> int:
        return int(self._config["seed"])

    @seed.setter
    def seed(self, value: int) -> None:
        self._config["seed"] = int(value)
        self.save()

    @property
    def jobs(self) -> int:
        return max(1, int(self._config.get("jobs", 1)))

    @jobs.setter
    def jobs(self, value: int) -> None:
        self._config["jobs"] = int(value)
        self.save()

    @property
    def perm_samples(self) -> int:
        return int(self._config["perm_samples"])

    @perm_samples.setter
    def perm_samples(self, value: int) -> None:
        self._config["perm_samples"] = int(value)
        self.save()

    @property
    def coeff_samples(self) -> int:
        return int(self._config["coeff_samples"])

    @coeff_samples.setter
    def coeff_samples(self, value: int) -> None:
        self._config["coeff_samples"] = int(value)
        self.save()

    @property
    def nf_samples(self) -> int:
        return int(self._config["nf_samples"])

    @nf_samples.setter
    def nf_samples(self, value: int) -> None:
        self._config["nf_samples"] = int(value)
        self.save()

    @property
    def ceilings(self) -> Dict[str, int]:
        return {k: int(v) for k, v in self._config["ceilings"].items()}

    @property
    def output(self) -> str:
        return self._config.get("output", "table")

    @output.setter
    def output(self, value: str) -> None:
        if value not in ("table", "json"):
            raise ValueError(f"unknown output format: {value}")
        self._config["output"] = value
        self.save()
