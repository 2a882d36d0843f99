"""Category data: fusion categories, 1-categories, groups and pointed modular data."""

from .fusion import ConsistencyReport, FusionData, FusionError, canonical_rotation, verify_consistency
from .generators import gen_fibonacci, gen_rep_g, gen_vec_g
from .groups import GroupData, GroupError, cyclic_group, dihedral_group_4, group_by_name, quaternion_group, symmetric_group_3
from .io import CategoryError, CategoryParseError, category_path, dumps, load_category, shipped_categories, write_category
from .onecat import OneCatData, OneCatError
from .pointed import PointedError, PointedModularData, gen_pointed, semion
from .repmodel import RepModel, UnsupportedGroupError, irreps_for

__all__ = [
    "ConsistencyReport", "FusionData", "FusionError", "canonical_rotation", "verify_consistency",
    "gen_fibonacci", "gen_rep_g", "gen_vec_g",
    "GroupData", "GroupError", "cyclic_group", "dihedral_group_4", "group_by_name", "quaternion_group",
    "symmetric_group_3",
    "CategoryError", "CategoryParseError", "category_path", "dumps", "load_category", "shipped_categories", "write_category",
    "OneCatData", "OneCatError", "PointedError", "PointedModularData", "gen_pointed", "semion",
    "RepModel", "UnsupportedGroupError", "irreps_for",
    "theta", "tet",
]


def theta(d: FusionData, a, b, c, alpha: int = 0):
    """Theta symbol by label index or name (no lambda factor)."""
    return d.theta(d.index(a), d.index(b), d.index(c), alpha)


def tet(d: FusionData, labels, mult=(0, 0, 0, 0)):
    """Tetrahedral symbol for edge labels ``(a, b, c, d, e, f)`` by index or name."""
    return d.tet(*(d.index(x) for x in labels), mult)
