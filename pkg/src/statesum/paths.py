"""Locations of shipped data; ``STATESUM_DATA_DIR`` overrides the package copy."""

from __future__ import annotations

import os
from pathlib import Path

__all__ = ["data_dir", "resolve", "shipped"]


def data_dir() -> Path:
    env = os.environ.get("STATESUM_DATA_DIR")
    return Path(env) if env else Path(__file__).resolve().parent / "data"


def resolve(name: str | os.PathLike, kind: str) -> Path:
    """A path as given if it exists or looks like a path, else ``data/<kind>/<name>.json``."""
    p = Path(name)
    if p.exists() or p.suffix == ".json" or len(p.parts) > 1:
        return p
    return data_dir() / kind / f"{name}.json"


def shipped(kind: str) -> list[str]:
    return sorted(p.stem for p in (data_dir() / kind).glob("*.json"))
