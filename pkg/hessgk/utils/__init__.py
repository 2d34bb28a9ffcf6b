"""Miscellaneous utilities."""

import os
import logging

from functools import lru_cache
from typing import Any, Final, TypedDict, cast

from .config import load_config
from .errors import ResourceGuardError


class Guards(TypedDict):
    max_perm_n: int
    max_degree: int
    max_edges: int
    max_toric_n: int


GUARD_ENV_VARS: Final[dict[str, str]] = {
    "max_perm_n": "HESSGK_MAX_PERM_N",
    "max_degree": "HESSGK_MAX_DEGREE",
    "max_edges": "HESSGK_MAX_EDGES",
    "max_toric_n": "HESSGK_MAX_TORIC_N",
}

_guard_overrides: dict[str, int] = {}


def get_logger(name: str | None) -> logging.Logger:
    logger = logging.getLogger(name)
    if not logger.handlers:
        logger.propagate = False
        logger.setLevel(logging.DEBUG)
        if name is not None:
            formatter = logging.Formatter(
                "[%(asctime)s]: [%(levelname)s] [%(name)s] %(message)s"
            )
        else:
            formatter = logging.Formatter(
                "[%(asctime)s]: [%(levelname)s] %(message)s"
            )

        ch = logging.StreamHandler()
        ch.setLevel(logging.INFO)
        ch.setFormatter(formatter)
        logger.addHandler(ch)

    return logger


@lru_cache(maxsize=64)
def warn_once(logger_name: str, message: str) -> None:
    logger = logging.getLogger(logger_name)
    logger.warning(message)


@lru_cache(maxsize=1)
def load_default_config() -> dict[str, Any]:
    return load_config()


@lru_cache(maxsize=1)
def load_reference_json() -> dict[str, Any]:
    """Loads the packaged reference expansions and the Delta table."""
    return load_config("reference.json")


def override_guards(**limits: int | None) -> None:
    """Sets process-wide guard limits, taking precedence over env and config.

    Passing None for a guard removes its override.
    """
    for name, value in limits.items():
        if name not in GUARD_ENV_VARS:
            raise ValueError(f"Unknown guard: {name}")
        if value is None:
            _guard_overrides.pop(name, None)
        elif value <= 0:
            raise ValueError(f"Guard {name} must be positive, got {value}")
        else:
            _guard_overrides[name] = value


def get_guards() -> Guards:
    """Returns the guard limits: overrides, then env vars, then config.json."""
    config_guards = load_default_config()["guards"]
    limits: dict[str, int] = {}
    for name, env_var in GUARD_ENV_VARS.items():
        value = int(config_guards[name])
        env_value = os.environ.get(env_var)
        if env_value is not None:
            if env_value.isdigit() and int(env_value) > 0:
                value = int(env_value)
            else:
                warn_once(
                    __name__,
                    f"Ignoring {env_var}={env_value!r}: expected a positive "
                    "integer",
                )
        limits[name] = _guard_overrides.get(name, value)

    return cast(Guards, limits)


def check_guard(name: str, requested: int) -> None:
    """Raises ResourceGuardError if requested exceeds the named guard."""
    limit = cast(dict[str, int], get_guards())[name]
    if requested > limit:
        raise ResourceGuardError(name, limit, requested)


__all__ = [
    "Guards",
    "load_config",
    "load_default_config",
    "load_reference_json",
    "get_logger",
    "warn_once",
    "get_guards",
    "override_guards",
    "check_guard",
]
