"""Finitely generated abelian groups in invariant-factor form."""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable

from .linalg import Matrix, SmithDecomposition, divisibility_chain, smith_normal_form


@dataclass(frozen=True)
class AbelianGroup:
    """``Z/d_1 + ... + Z/d_r + Z^free_rank`` with ``2 <= d_1 | d_2 | ... | d_r``.

    Two presentations describe isomorphic groups exactly when the
    ``AbelianGroup`` values compare equal.
    """

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        t = tuple(self.torsion)
        object.__setattr__(self, "torsion", t)
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(d < 2 for d in t):
            raise ValueError(f"torsion factors must be >= 2: {t}")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion factors do not form a divisibility chain: {t}")

    @classmethod
    def from_smith(cls, snf: SmithDecomposition) -> AbelianGroup:
        return cls(snf.torsion, snf.free_rank)

    def torsion_subgroup(self) -> AbelianGroup:
        return AbelianGroup(self.torsion, 0)

    @property
    def order(self) -> int | None:
        return group_order(self)

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        parts += ["Z"] * self.free_rank
        return " ⊕ ".join(parts) if parts else "0"


def canonicalize(cyclic_orders: Iterable[int]) -> AbelianGroup:
    """Normal form of ``Z/c_1 + Z/c_2 + ...``; an order of 0 stands for a copy of Z."""
    orders = list(cyclic_orders)
    if any(c < 0 for c in orders):
        raise ValueError("cyclic orders must be nonnegative")
    free = orders.count(0)
    # merging can turn coprime orders into new units
    chain = divisibility_chain(c for c in orders if c > 1)
    return AbelianGroup(tuple(d for d in chain if d > 1), free)


def group_order(g: AbelianGroup) -> int | None:
    """Product of the torsion factors, or None when the group is infinite."""
    if g.free_rank:
        return None
    return prod(g.torsion)


def cokernel(m: Matrix) -> AbelianGroup:
    """``Z^rows / im(M)``."""
    return AbelianGroup.from_smith(smith_normal_form(m))
