"""Explicit Jacobian of the discrete torus Delta(n; 1,1,1) = C_3 x C_n, spanning
tree counts, and cross-method verification reports."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd, lcm

from . import linalg
from .chebyshev import mu, mu_hat, nu
from .graph import DeltaGraphSpec, delta_laplacian
from .groups import AbelianGroup, canonicalize, cokernel, group_order
from .reduction import (
    MethodNotApplicableError,
    split_cokernel,
    theorem1_cokernel,
)

METHODS = ("closed", "snf", "theorem1", "split")


def theorem2_orders(n: int) -> list[int]:
    """The five cyclic orders of J_n exactly as the closed formula lists them.

    The first one is often 1; it is kept here and dropped by :func:`canonicalize`.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    v = nu(n)
    return [
        gcd(n, v) // gcd(n, 3),
        v,
        v,
        mu_hat(n) * v,
        3 * mu(n) * lcm(n, v),
    ]


def render_as_stated(n: int) -> str:
    return " ⊕ ".join(f"Z/{d}" for d in theorem2_orders(n))


def jacobian_closed_111(n: int) -> AbelianGroup:
    return canonicalize(theorem2_orders(n))


def closed_cokernel(spec: DeltaGraphSpec) -> AbelianGroup:
    if not spec.is_torus:
        raise MethodNotApplicableError(f"{spec}: the closed form covers jumps (1,1,1) only")
    return AbelianGroup(jacobian_closed_111(spec.n).torsion, 1)


def laplacian_cokernel(spec: DeltaGraphSpec) -> AbelianGroup:
    return cokernel(delta_laplacian(spec))


def jacobian_via_laplacian(spec: DeltaGraphSpec) -> AbelianGroup:
    if not spec.connected:
        warnings.warn(f"{spec} is disconnected; its cokernel has free rank > 1", stacklevel=2)
    return laplacian_cokernel(spec).torsion_subgroup()


def spanning_tree_count(spec: DeltaGraphSpec) -> int:
    """Matrix-Tree theorem: delete the last row and column of the Laplacian."""
    if not spec.connected:
        warnings.warn(f"{spec} is disconnected; it has no spanning tree", stacklevel=2)
        return 0
    lap = delta_laplacian(spec)
    return linalg.determinant([row[:-1] for row in lap[:-1]])


def cokernel_by_method(spec: DeltaGraphSpec, method: str) -> AbelianGroup:
    """Full ``coker(L)`` (torsion plus free part) computed by the named route."""
    if method == "closed":
        return closed_cokernel(spec)
    if method == "snf":
        return laplacian_cokernel(spec)
    if method == "theorem1":
        return theorem1_cokernel(spec)
    if method == "split":
        return split_cokernel(spec)
    raise ValueError(f"unknown method {method!r}")


def applicable_methods(spec: DeltaGraphSpec) -> tuple[str, ...]:
    if spec.is_torus:
        return METHODS
    return ("snf", "theorem1")


@dataclass
class VerificationReport:
    n: int
    k: int
    l: int
    m: int
    groups: dict[str, AbelianGroup]
    tree_count: int
    agreement: dict[tuple[str, str], bool] = field(default_factory=dict)

    def __post_init__(self):
        if not self.agreement:
            for a, b in combinations(self.groups, 2):
                self.agreement[a, b] = self.groups[a] == self.groups[b]

    @property
    def order_matches_trees(self) -> bool:
        return all(group_order(g.torsion_subgroup()) == self.tree_count
                   for g in self.groups.values())

    @property
    def ok(self) -> bool:
        return all(self.agreement.values()) and self.order_matches_trees

    def first_failure(self) -> str | None:
        for (a, b), same in self.agreement.items():
            if not same:
                return f"{a}: {self.groups[a]} != {b}: {self.groups[b]}"
        if not self.order_matches_trees:
            orders = {k: group_order(g.torsion_subgroup()) for k, g in self.groups.items()}
            return f"group orders {orders} != tree count {self.tree_count}"
        return None


def verify_spec(spec: DeltaGraphSpec, methods: tuple[str, ...] | None = None) -> VerificationReport:
    methods = methods or applicable_methods(spec)
    groups = {meth: cokernel_by_method(spec, meth) for meth in methods}
    return VerificationReport(spec.n, spec.k, spec.l, spec.m, groups, spanning_tree_count(spec))
