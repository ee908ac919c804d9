"""Configuration loader for CLI."""

import logging
import os
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

CONFIG_FILENAME = ".inertiadiag.yaml"
ENV_PREFIX = "INERTIADIAG_"


class Config:
    """Application configuration manager."""

    def __init__(self) -> None:
        """Initialize configuration with defaults."""
        self.steps: int = 512
        self.sweep_steps: int = 64
        self.real_tolerance: float = 1e-8
        self.zero_tolerance: Optional[float] = None  # None means 1e-12·dim·max|entry|
        self.seed: int = 42
        self.workers: int = 1
        self.log_level: str = "INFO"

    @classmethod
    def load(cls, config_file: Optional[str] = None) -> "Config":
        """Load configuration from file and environment variables.

        Priority (highest to lowest):
        1. Environment variables
        2. Config file
        3. Defaults

        Args:
            config_file: Path to config file (optional)

        Returns:
            Config instance
        """
        config = cls()

        if config_file:
            config_path = Path(config_file)
        else:
            config_path = Path(CONFIG_FILENAME)
            if not config_path.exists():
                config_path = Path.home() / CONFIG_FILENAME

        if config_path.exists():
            config._load_from_file(config_path)
        elif config_file:
            logger.warning(f"Config file {config_path} not found; using defaults")

        config._load_from_env()

        return config

    def _load_from_file(self, config_path: Path) -> None:
        """Load configuration from YAML file.

        Args:
            config_path: Path to config file
        """
        try:
            with open(config_path, "r") as f:
                data = yaml.safe_load(f)

            if not data:
                return

            self.steps = int(data.get("steps", self.steps))
            self.sweep_steps = int(data.get("sweep_steps", self.sweep_steps))
            self.real_tolerance = float(data.get("real_tolerance", self.real_tolerance))
            zero_tolerance = data.get("zero_tolerance", self.zero_tolerance)
            self.zero_tolerance = None if zero_tolerance is None else float(zero_tolerance)
            self.seed = int(data.get("seed", self.seed))
            self.workers = int(data.get("workers", self.workers))
            self.log_level = str(data.get("log_level", self.log_level))

            logger.info(f"Loaded configuration from {config_path}")

        except Exception as e:
            logger.warning(f"Could not load config file {config_path}: {e}")

    def _env_override(self, name: str, convert: Callable[[str], Any]) -> None:
        raw = os.getenv(f"{ENV_PREFIX}{name.upper()}")
        if not raw:
            return
        try:
            setattr(self, name, convert(raw))
        except ValueError:
            logger.warning(f"Ignoring malformed {ENV_PREFIX}{name.upper()}={raw!r}")

    def _load_from_env(self) -> None:
        """Load configuration from environment variables."""
        self._env_override("steps", int)
        self._env_override("workers", int)
        self._env_override("seed", int)
        self._env_override("log_level", str)

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary.

        Returns:
            Configuration as dictionary
        """
        return {
            "steps": self.steps,
            "sweep_steps": self.sweep_steps,
            "real_tolerance": self.real_tolerance,
            "zero_tolerance": self.zero_tolerance,
            "seed": self.seed,
            "workers": self.workers,
            "log_level": self.log_level,
        }
