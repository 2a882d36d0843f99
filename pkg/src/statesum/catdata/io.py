"""JSON (de)serialization and the checked loader for every category kind.

Files are written with a fixed key order and layout, so regenerating a
shipped file reproduces it byte for byte.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Union

from ..paths import resolve, shipped
from ..scalar import FieldError, NumberField
from .fusion import FusionData, FusionError, verify_consistency
from .groups import GroupData, GroupError
from .onecat import OneCatData, OneCatError
from .pointed import PointedError, PointedModularData

__all__ = ["CategoryError", "CategoryParseError", "load_category", "fusion_to_json", "fusion_from_json", "to_json", "dumps",
           "write_category", "category_path", "shipped_categories"]

Category = Union[FusionData, OneCatData, PointedModularData, GroupData]


class CategoryError(ValueError):
    pass


class CategoryParseError(CategoryError):
    """The file is missing, not JSON, or not shaped like category data."""


def fusion_to_json(d: FusionData) -> dict:
    nm = d.labels
    return {
        "kind": "fusion",
        "name": d.name,
        "description": d.description,
        "field": d.field.to_json(),
        "labels": list(nm),
        "dual": {nm[a]: nm[d.dual[a]] for a in range(d.rank)},
        "qdim": {nm[a]: d.qdim[a].format() for a in range(d.rank)},
        "lambda": d.lam.format(),
        "fusion": [[nm[a], nm[b], nm[c], n] for (a, b, c), n in sorted(d.fusion.items())],
        "theta": [[nm[k[0]], nm[k[1]], nm[k[2]], k[3], v.format()] for k, v in sorted(d.theta_table.items())],
        "fsymbols": [[*(nm[x] for x in k[:6]), list(k[6:]), v.format()] for k, v in sorted(d.fsymbols.items())],
    }


_FUSION_KEYS = {"kind", "name", "description", "field", "labels", "dual", "qdim", "lambda", "fusion", "theta", "fsymbols"}


def fusion_from_json(data: dict) -> FusionData:
    unknown = set(data) - _FUSION_KEYS
    if unknown:
        raise CategoryError(f"unknown fusion fields: {sorted(unknown)}")
    missing = {"field", "labels", "dual", "qdim", "fusion", "theta", "fsymbols"} - set(data)
    if missing:
        raise CategoryError(f"missing fusion fields: {sorted(missing)}")
    fld = NumberField.from_json(data["field"])
    labels = [str(x) for x in data["labels"]]
    idx = {s: i for i, s in enumerate(labels)}
    if len(idx) != len(labels):
        raise CategoryError("duplicate label names")

    def ix(s):
        try:
            return idx[str(s)]
        except KeyError:
            raise CategoryError(f"unknown label {s!r}") from None

    dual = [ix(data["dual"][s]) if s in data["dual"] else -1 for s in labels]
    if -1 in dual:
        raise CategoryError(f"dual missing for {labels[dual.index(-1)]!r}")
    qdim = []
    for s in labels:
        if s not in data["qdim"]:
            raise CategoryError(f"qdim missing for {s!r}")
        qdim.append(fld.parse(str(data["qdim"][s])))
    fusion = {}
    for a, b, c, n in data["fusion"]:
        if int(n):
            fusion[(ix(a), ix(b), ix(c))] = int(n)
    theta = {(ix(a), ix(b), ix(c), int(al)): fld.parse(str(v)) for a, b, c, al, v in data["theta"]}
    fs = {}
    for row in data["fsymbols"]:
        if len(row) != 8 or len(row[6]) != 4:
            raise CategoryError(f"malformed fsymbol row {row!r}")
        fs[tuple(ix(x) for x in row[:6]) + tuple(int(m) for m in row[6])] = fld.parse(str(row[7]))
    return FusionData(data.get("name", ""), fld, labels, dual, fusion, qdim, theta, fs,
                      fld.parse(str(data.get("lambda", "1"))), data.get("description", ""))


def to_json(obj: Category) -> dict:
    if isinstance(obj, FusionData):
        return fusion_to_json(obj)
    return obj.to_json()


def dumps(obj: Category) -> str:
    return json.dumps(to_json(obj), indent=1, ensure_ascii=False) + "\n"


def write_category(obj: Category, path: str | os.PathLike) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def _parse(data: dict, pentagon: bool, wrt: bool) -> Category:
    kind = data.get("kind")
    if kind == "fusion":
        d = fusion_from_json(data)
        rep = verify_consistency(d, pentagon=pentagon)
        if not rep.ok:
            raise CategoryError(f"{d.name or 'fusion data'} fails verification: " + "; ".join(rep.problems[:10]))
        return d
    if kind == "onecat":
        return OneCatData.from_json(data)
    if kind == "pointed":
        return PointedModularData.from_json(data, wrt=wrt)
    if kind == "group":
        return GroupData.from_json(data)
    raise CategoryError(f"unknown category kind {kind!r}; expected fusion, onecat, pointed or group")


def load_category(file: str | os.PathLike, pentagon: bool = True, wrt: bool = False) -> Category:
    """Load and verify a category file; a bare name refers to shipped data."""
    path = category_path(file)
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CategoryParseError(f"{path}: cannot read ({exc.strerror or exc})") from None
    except json.JSONDecodeError as exc:
        raise CategoryParseError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise CategoryParseError(f"{path}: top level must be an object")
    try:
        return _parse(data, pentagon, wrt)
    except (KeyError, TypeError) as exc:
        raise CategoryParseError(f"{path}: malformed data ({exc!r})") from None
    except (FusionError, OneCatError, PointedError, GroupError, FieldError) as exc:
        raise CategoryError(f"{path}: {exc}") from None


def category_path(name: str | os.PathLike) -> Path:
    return resolve(name, "categories")


def shipped_categories() -> list[str]:
    return shipped("categories")
