"""
Configuration Management

Handles loading and saving configuration files.
"""

import copy
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

DEFAULT_CONFIG_FILE = "reqlint.yaml"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Config:
    """Configuration manager for reqlint analyses"""

    DEFAULT_CONFIG = {
        "engine": {
            "max_states": 1000000,  # tableau states per satisfiability check
            "timeout": 60.0,  # seconds per satisfiability check
        },
        "analyses": {
            "connectivity": True,
            "verify_mus": False,  # re-check minimality of every explanation
            "show_progress": False,
        },
        "report": {
            "json_indent": 2,
            "color": None,  # None: REQLINT_COLOR, else colour iff stdout is a tty
        },
        "logging": {
            "level": "WARNING",
        },
    }

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration

        Args:
            config_path: Path to configuration file (YAML or JSON)
        """
        self.logger = logging.getLogger("reqlint.Config")
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)

        if config_path:
            self.load(config_path)

    def load(self, filepath: str) -> bool:
        """
        Load configuration from file

        Args:
            filepath: Path to configuration file

        Returns:
            bool: True if load successful
        """
        try:
            filepath = Path(filepath)

            if not filepath.exists():
                self.logger.warning(f"Config file not found: {filepath}")
                return False

            with open(filepath, "r", encoding="utf-8") as f:
                if filepath.suffix in [".yaml", ".yml"]:
                    loaded_config = yaml.safe_load(f)
                elif filepath.suffix == ".json":
                    loaded_config = json.load(f)
                else:
                    self.logger.error(f"Unsupported config format: {filepath.suffix}")
                    return False

            if loaded_config is None:
                loaded_config = {}
            if not isinstance(loaded_config, dict):
                self.logger.error(f"Config file must hold a mapping: {filepath}")
                return False

            self._deep_update(self.config, loaded_config)

            self.logger.info(f"Configuration loaded from {filepath}")
            return True

        except Exception as e:
            self.logger.error(f"Failed to load config: {e}")
            return False

    def save(self, filepath: str) -> bool:
        """
        Save configuration to file

        Args:
            filepath: Path to save configuration file

        Returns:
            bool: True if save successful
        """
        try:
            filepath = Path(filepath)
            filepath.parent.mkdir(parents=True, exist_ok=True)

            with open(filepath, "w", encoding="utf-8") as f:
                if filepath.suffix in [".yaml", ".yml"]:
                    yaml.dump(self.config, f, default_flow_style=False)
                elif filepath.suffix == ".json":
                    json.dump(self.config, f, indent=2)
                else:
                    self.logger.error(f"Unsupported config format: {filepath.suffix}")
                    return False

            self.logger.info(f"Configuration saved to {filepath}")
            return True

        except Exception as e:
            self.logger.error(f"Failed to save config: {e}")
            return False

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value using dot notation

        Args:
            key: Configuration key (e.g., "engine.max_states")
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        value = self.config
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any):
        """
        Set configuration value using dot notation

        Args:
            key: Configuration key (e.g., "engine.timeout")
            value: Value to set
        """
        keys = key.split(".")
        config = self.config
        for k in keys[:-1]:
            if not isinstance(config.get(k), dict):
                config[k] = {}
            config = config[k]
        config[keys[-1]] = value

    def validate(self) -> List[str]:
        """
        Check the engine caps and logging level

        Returns:
            list: One message per invalid value (empty if the configuration is usable)
        """
        problems = []
        max_states = self.get("engine.max_states")
        if isinstance(max_states, bool) or not isinstance(max_states, int) or max_states < 1:
            problems.append(f"engine.max_states must be a positive integer, got {max_states!r}")
        timeout = self.get("engine.timeout")
        if timeout is not None and (isinstance(timeout, bool) or not isinstance(timeout, (int, float)) or timeout <= 0):
            problems.append(f"engine.timeout must be a positive number or null, got {timeout!r}")
        level = str(self.get("logging.level", "WARNING")).upper()
        if level not in LOG_LEVELS:
            problems.append(f"logging.level must be one of {', '.join(LOG_LEVELS)}, got {level!r}")
        for problem in problems:
            self.logger.error(problem)
        return problems

    def _deep_update(self, base: Dict, update: Dict):
        for key, value in update.items():
            if isinstance(value, dict) and isinstance(base.get(key), dict):
                self._deep_update(base[key], value)
            else:
                base[key] = value

    def to_dict(self) -> Dict[str, Any]:
        """
        Get configuration as dictionary

        Returns:
            dict: Deep copy of the configuration
        """
        return copy.deepcopy(self.config)

    def __repr__(self) -> str:
        return f"<Config({len(self.config)} sections)>"
