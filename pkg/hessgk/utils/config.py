"""Includes functionality for loading config files."""

import json

from importlib import resources
from typing import Any, cast


def load_config(name: str = "config.json") -> dict[str, Any]:
    """Returns a dictionary loaded from a JSON file in hessgk.config."""
    resource = resources.files("hessgk.config").joinpath(name)
    if not name.endswith(".json") or not resource.is_file():
        raise ValueError(f"Error finding packaged config file {name}")

    with resource.open("r") as f:
        return cast(dict[str, Any], json.load(f))
