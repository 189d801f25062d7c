"""Cokernel reductions for Delta-graph Laplacians.

Eliminating the third layer of variables turns the 3n x 3n Laplacian into a
2n x 2n block matrix with the same cokernel.  For Delta(n; 1,1,1) the
cokernel splits further into ``coker(P(T)) + coker(Q(T))`` with

    P(z) = -z^-1 + 5 - z                    (= I + A)
    Q(z) = z^-2 - 7 z^-1 + 12 - 7 z + z^2   (= (A - 2I)(I + A))

and each circulant cokernel is in turn that of a fixed-size companion
power ``C**n - I``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg
from .chebyshev import cheb_pair
from .graph import DeltaGraphSpec, jump_block
from .groups import AbelianGroup, canonicalize, cokernel
from .linalg import Matrix

P_COMPANION: Matrix = [[0, 1], [-1, 5]]
Q_COMPANION: Matrix = [
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 7, -12, 7],
]
P_LAURENT = {-1: -1, 0: 5, 1: -1}
Q_LAURENT = {-2: 1, -1: -7, 0: 12, 1: -7, 2: 1}


class MethodNotApplicableError(ValueError):
    pass


def _warn_if_disconnected(spec: DeltaGraphSpec) -> None:
    if not spec.connected:
        warnings.warn(f"{spec} is disconnected; its cokernel has free rank > 1", stacklevel=3)


def theorem1_matrix(spec: DeltaGraphSpec) -> Matrix:
    """``[[-I - A, I + B], [-I + C A, -I - C]]`` with ``A, B, C`` the layer blocks."""
    n = spec.n
    a, b, c = (jump_block(n, j) for j in spec.jumps)
    i = linalg.identity(n)
    return linalg.block([
        [linalg.neg(linalg.add(i, a)), linalg.add(i, b)],
        [linalg.sub(linalg.matmul(c, a), i), linalg.neg(linalg.add(i, c))],
    ])


def theorem1_cokernel(spec: DeltaGraphSpec) -> AbelianGroup:
    return cokernel(theorem1_matrix(spec))


def jacobian_via_theorem1(spec: DeltaGraphSpec) -> AbelianGroup:
    _warn_if_disconnected(spec)
    return theorem1_cokernel(spec).torsion_subgroup()


def _require_torus(spec: DeltaGraphSpec | int) -> DeltaGraphSpec:
    if isinstance(spec, int):
        spec = DeltaGraphSpec(spec)
    if not spec.is_torus:
        raise MethodNotApplicableError(f"{spec}: the split applies only to jumps (1,1,1)")
    return spec


def split_matrices_111(n: int | DeltaGraphSpec) -> tuple[Matrix, Matrix]:
    """``(I + A, (-2I + A)(I + A))`` as n x n circulants."""
    n = _require_torus(n).n
    return linalg.laurent_in_shift(n, P_LAURENT), linalg.laurent_in_shift(n, Q_LAURENT)


def _direct_sum(*groups: AbelianGroup) -> AbelianGroup:
    orders = [d for g in groups for d in g.torsion]
    orders += [0] * sum(g.free_rank for g in groups)
    return canonicalize(orders)


def split_cokernel(n: int | DeltaGraphSpec) -> AbelianGroup:
    p, q = split_matrices_111(n)
    return _direct_sum(cokernel(p), cokernel(q))


def jacobian_via_split(n: int | DeltaGraphSpec) -> AbelianGroup:
    return split_cokernel(n).torsion_subgroup()


def companion_power_reduction_2(n: int) -> Matrix:
    return linalg.matrix_power_minus_identity(P_COMPANION, n)


def companion_power_reduction_4(n: int) -> Matrix:
    return linalg.matrix_power_minus_identity(Q_COMPANION, n)


def companion_cokernel(n: int | DeltaGraphSpec) -> AbelianGroup:
    """Same group as :func:`split_cokernel`, through the 2x2 and 4x4 companion powers."""
    n = _require_torus(n).n
    return _direct_sum(cokernel(companion_power_reduction_2(n)),
                       cokernel(companion_power_reduction_4(n)))


# Rows of B(n) = Q**n - I as (n, u, v) coefficient triples.
_B_TABLE = [
    [(Fraction(1, 3), Fraction(5, 6), Fraction(-23, 6)),
     (-2, Fraction(-11, 6), Fraction(17, 2)),
     (2, Fraction(7, 6), Fraction(-11, 2)),
     (Fraction(-1, 3), Fraction(-1, 6), Fraction(5, 6))],
    [(Fraction(1, 3), Fraction(1, 6), Fraction(-5, 6)),
     (-2, Fraction(-1, 3), 2),
     (2, Fraction(1, 6), Fraction(-3, 2)),
     (Fraction(-1, 3), 0, Fraction(1, 3))],
    [(Fraction(1, 3), 0, Fraction(-1, 3)),
     (-2, Fraction(1, 6), Fraction(3, 2)),
     (2, Fraction(-1, 3), -2),
     (Fraction(-1, 3), Fraction(1, 6), Fraction(5, 6))],
    [(Fraction(1, 3), Fraction(-1, 6), Fraction(-5, 6)),
     (-2, Fraction(7, 6), Fraction(11, 2)),
     (2, Fraction(-11, 6), Fraction(-17, 2)),
     (Fraction(-1, 3), Fraction(5, 6), Fraction(23, 6))],
]


def b_matrix(n: int) -> Matrix:
    """``Q**n - I`` evaluated from its closed form in ``n``, ``u`` and ``v``."""
    cp = cheb_pair(n)
    out = []
    for row in _B_TABLE:
        r = []
        for cn, cu, cv in row:
            x = cn * n + cu * cp.u + cv * cp.v
            if x.denominator != 1:
                raise ArithmeticError(f"non-integral entry {x} in B({n})")
            r.append(int(x))
        out.append(r)
    return out


@dataclass(frozen=True)
class DValues:
    """gcds of the k x k minors of ``B(n)`` for k = 1, 2, 3."""

    n: int
    d1: int
    d2: int
    d3: int

    def __post_init__(self):
        if min(self.d1, self.d2, self.d3) < 1:
            raise ArithmeticError(f"nonpositive d-value at n={self.n}")
        if self.d2 % self.d1 or self.d3 % self.d2:
            raise ArithmeticError(f"d1 | d2 | d3 fails at n={self.n}")

    @property
    def invariant_factors(self) -> tuple[int, int, int]:
        return self.d1, self.d2 // self.d1, self.d3 // self.d2


def d_values(n: int) -> DValues:
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    cp = cheb_pair(n)
    u, v = cp.u, cp.v
    g3 = gcd(n, 3)
    d1 = gcd(gcd(n, u), v) // g3
    d2 = gcd(u, n * v) // g3
    if n % 3 == 0:
        d2 //= 2
    d3 = n * u // 3
    return DValues(n, d1, d2, d3)
