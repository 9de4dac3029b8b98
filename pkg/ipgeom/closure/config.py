import copy
import logging
import os
from typing import Mapping

import yaml

from .errors import ConfigError

logger = logging.getLogger(__name__)

DIR = os.path.dirname(os.path.abspath(__file__))
DEFAULT_CONFIG_FILENAME = os.path.join(DIR, "default_config.yml")

with open(DEFAULT_CONFIG_FILENAME, "r") as f:
    DEFAULT_CONFIG = yaml.safe_load(f)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _merge(base: dict, override: Mapping, prefix: str = "") -> dict:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        name = f"{prefix}{key}"
        if key not in base:
            raise ConfigError(f"unknown configuration key {name}")
        if isinstance(base[key], dict):
            if not isinstance(value, Mapping):
                raise ConfigError(f"configuration key {name} must be a mapping")
            merged[key] = _merge(base[key], value, prefix=f"{name}.")
        else:
            merged[key] = value
    return merged


def _validate(config: dict):
    viewport = config["viewport"]
    try:
        valid = len(viewport) == 2 and all(
            len(bounds) == 2 and bounds[0] < bounds[1] for bounds in viewport
        )
    except TypeError:
        valid = False
    if not valid:
        raise ConfigError(f"viewport must be two [low, high] pairs, got {viewport}")
    for key in ("split_box", "unbounded_radius", "ray_window"):
        value = config[key]
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ConfigError(f"{key} must be a positive integer, got {value!r}")
    if str(config["log_level"]).upper() not in LOG_LEVELS:
        raise ConfigError(f"log_level must be one of {LOG_LEVELS}")


def load_config(path: str = None) -> dict:
    """Return the default configuration, merged with the YAML file at path.

    Raises:
        ConfigError: on unknown keys or invalid values
    """
    if path is None:
        return copy.deepcopy(DEFAULT_CONFIG)
    with open(path, "r") as f:
        user_config = yaml.safe_load(f) or {}
    if not isinstance(user_config, Mapping):
        raise ConfigError(f"configuration file {path} must contain a mapping")
    config = _merge(DEFAULT_CONFIG, user_config)
    _validate(config)
    logger.debug("loaded configuration from %s", path)
    return config
