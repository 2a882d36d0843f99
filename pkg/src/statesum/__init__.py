"""Exact state-sum invariants: Turaev-Viro, Dijkgraaf-Witten, surface sums and pointed surgery."""

__version__ = "0.1.0"

from .scalar import QQ, FieldElement, NumberField, cyclotomic_field  # noqa: E402
from .registry import load_manifold, load_triangulation  # noqa: E402
from .engine import StateSumResult, n1_state_sum, state_sum  # noqa: E402
from .dw import dw_invariant, hom_count_oracle  # noqa: E402
from .surgery import FramedLink, surgery_sum  # noqa: E402

__all__ = [
    "__version__", "QQ", "FieldElement", "NumberField", "cyclotomic_field",
    "load_manifold", "load_triangulation", "StateSumResult", "state_sum", "n1_state_sum",
    "dw_invariant", "hom_count_oracle", "FramedLink", "surgery_sum",
]
