"""Built-in manifolds: which shipped decompositions present which manifold."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .cells import CellComplex, ComplexError, dual_complex, load_complex
from .paths import data_dir
from .triangulation import Triangulation

__all__ = ["Manifold", "MANIFOLDS", "TOPOLOGIES", "load_manifold", "load_triangulation", "decompositions",
           "manifold_path", "topology_of"]


@dataclass(frozen=True)
class Manifold:
    name: str
    topology: str
    dim: int
    kind: str  # "triangulation" or "complex"
    orientable: bool


_TABLE = [
    ("s3_2tet", "s3", 3, "triangulation", True),
    ("s3_1vertex", "s3", 3, "triangulation", True),
    ("s3_bdy4simplex", "s3", 3, "triangulation", True),
    ("s3_minimal", "s3", 3, "complex", True),
    ("rp3", "rp3", 3, "triangulation", True),
    ("l31", "l31", 3, "triangulation", True),
    ("s2xs1", "s2xs1", 3, "triangulation", True),
    ("s2xs1_minimal", "s2xs1", 3, "complex", True),
    ("t3", "t3", 3, "triangulation", True),
    ("s4_bdy5simplex", "s4", 4, "triangulation", True),
    ("t4", "t4", 4, "triangulation", True),
    ("s2", "s2", 2, "triangulation", True),
    ("t2", "t2", 2, "triangulation", True),
    ("genus2", "genus2", 2, "triangulation", True),
    ("rp2", "rp2", 2, "triangulation", False),
    ("klein", "klein", 2, "triangulation", False),
]

MANIFOLDS: dict[str, Manifold] = {row[0]: Manifold(*row) for row in _TABLE}

TOPOLOGIES: dict[str, list[str]] = {}
for _m in MANIFOLDS.values():
    TOPOLOGIES.setdefault(_m.topology, []).append(_m.name)


def manifold_path(name: str | os.PathLike) -> Path:
    """Path of a built-in decomposition, or the argument itself when it names a file."""
    p = Path(name)
    if p.exists() or p.suffix == ".json" or len(p.parts) > 1:
        return p
    m = MANIFOLDS.get(str(name))
    if m is None:
        raise ComplexError(f"unknown manifold {name!r}; built-ins: {', '.join(MANIFOLDS)}")
    sub = "manifolds" if m.kind == "triangulation" else "complexes"
    return data_dir() / sub / f"{m.name}.json"


def load_manifold(name: str | os.PathLike) -> CellComplex:
    """Cell complex of a built-in name or file; triangulations are dualized."""
    c = load_complex(manifold_path(name))
    if not c.name:
        c.name = Path(str(name)).stem
    return c


def load_triangulation(name: str | os.PathLike) -> Triangulation:
    path = manifold_path(name)
    m = MANIFOLDS.get(str(name))
    if m is not None and m.kind != "triangulation":
        raise ComplexError(f"{name} is a hand-built cell complex, not a triangulation")
    return Triangulation.load(path)


def decompositions(topology: str) -> list[str]:
    return list(TOPOLOGIES.get(topology, []))


def topology_of(name: str) -> str | None:
    m = MANIFOLDS.get(name)
    return m.topology if m else None


def as_complex(x) -> CellComplex:
    if isinstance(x, CellComplex):
        return x
    if isinstance(x, Triangulation):
        return dual_complex(x)
    return load_manifold(x)
