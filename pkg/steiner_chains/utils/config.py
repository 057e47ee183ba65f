#!/usr/bin/env python3
"""
Configuration Manager - tolerances and output defaults.
Provides config file support for the steiner-chains CLI tool.
"""

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, Optional, Union

from .logger import get_logger

logger = get_logger(__name__)


@dataclass
class SteinerConfig:
    """Numeric tolerances and output settings"""
    # Relative tolerances
    geometry_tol: float = 1e-9
    feasibility_tol: float = 1e-6
    discriminant_tol: float = 1e-9

    # Sweep settings
    sweep_points: int = 1001
    sweep_workers: int = 4

    # Output settings
    svg_precision: int = 6
    svg_margin: float = 0.05
    number_digits: int = 17


class ConfigManager:
    """Configuration file manager bound to an explicit JSON file"""

    def __init__(self, config_file: Union[str, Path]):
        self.config_file = Path(config_file)

    def save_config(self, config: SteinerConfig) -> bool:
        """Save configuration to file"""
        try:
            self.config_file.parent.mkdir(parents=True, exist_ok=True)
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(asdict(config), f, indent=2, sort_keys=True)
            logger.info(f"Configuration saved to {self.config_file}")
            return True
        except OSError as e:
            logger.error(f"Failed to save config: {e}")
            return False

    def load_config(self) -> SteinerConfig:
        """Load configuration from file"""
        if not self.config_file.exists():
            logger.info("No config file found, using defaults")
            return SteinerConfig()

        try:
            with open(self.config_file, 'r', encoding='utf-8') as f:
                config_dict = json.load(f)
        except (OSError, ValueError) as e:
            logger.error(f"Failed to load config: {e}, using defaults")
            return SteinerConfig()

        known = {f.name for f in fields(SteinerConfig)}
        for key in sorted(set(config_dict) - known):
            logger.warning(f"Unknown config key: {key}")
        config = SteinerConfig(**{k: v for k, v in config_dict.items() if k in known})
        logger.info(f"Configuration loaded from {self.config_file}")
        return config


def get_merged_config(cli_args: Dict[str, Any], path: Optional[Union[str, Path]] = None) -> SteinerConfig:
    """Merge CLI arguments with config file settings"""
    config = ConfigManager(path).load_config() if path else SteinerConfig()

    # CLI arguments override config file
    for key, value in cli_args.items():
        if value is not None and hasattr(config, key):
            setattr(config, key, value)

    return config
