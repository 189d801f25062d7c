"""Exact Jacobian (critical) groups of Delta-graphs Delta(n; k, l, m)."""
from .closed_form import (
    jacobian_closed_111,
    jacobian_via_laplacian,
    spanning_tree_count,
    verify_spec,
)
from .graph import DeltaGraphSpec, build_delta_graph, delta_laplacian
from .groups import AbelianGroup, canonicalize, group_order
from .reduction import jacobian_via_split, jacobian_via_theorem1

__all__ = [
    "AbelianGroup",
    "DeltaGraphSpec",
    "build_delta_graph",
    "canonicalize",
    "delta_laplacian",
    "group_order",
    "jacobian_closed_111",
    "jacobian_via_laplacian",
    "jacobian_via_split",
    "jacobian_via_theorem1",
    "spanning_tree_count",
    "verify_spec",
]
