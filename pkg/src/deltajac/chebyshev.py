"""Integer sequences from Chebyshev polynomials evaluated at 5/2.

All of them obey ``t(j+1) = 5 t(j) - t(j-1)``; they are produced by that
recursion only, never through trigonometric or floating point forms.

* ``cheb_a(n) = 2 T_n(5/2)``:      2, 5, 23, 110, 527, ...
* ``cheb_b(n) = U_{n-1}(5/2)``:    0, 1, 5, 24, 115, ...
* ``nu(n)``: ``cheb_b(n/2)`` for even n; for odd ``n = 2j + 1`` the sequence
  1, 6, 29, 139, ... (the integers ``sqrt(7) U_{n/2-1}(5/2)``).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from math import gcd


class _Recurrence:
    """Memo table for ``t(j+1) = 5 t(j) - t(j-1)`` with fixed seeds."""

    def __init__(self, t0: int, t1: int):
        self._terms = [t0, t1]
        self._lock = threading.Lock()

    def __getitem__(self, j: int) -> int:
        if j < 0:
            raise ValueError(f"negative index {j}")
        terms = self._terms
        if j >= len(terms):
            with self._lock:
                while len(terms) <= j:
                    terms.append(5 * terms[-1] - terms[-2])
        return terms[j]


_A = _Recurrence(2, 5)
_B = _Recurrence(0, 1)
_NU_ODD = _Recurrence(1, 6)
# 2 T_{j+1/2}(5/2) / sqrt(7): the companion of _NU_ODD in the half-angle identities
_A_HALF = _Recurrence(1, 4)


def cheb_a(n: int) -> int:
    return _A[n]


def cheb_b(n: int) -> int:
    return _B[n]


def cheb_a_half(j: int) -> int:
    """``2 T_{j+1/2}(5/2) / sqrt(7)``: 1, 4, 19, 91, ..."""
    return _A_HALF[j]


def mu(n: int) -> int:
    """2-periodic 1, 7, 1, 7, ... with ``mu(n) = 7`` for even n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return 7 if n % 2 == 0 else 1


def mu_hat(n: int) -> int:
    return gcd(n, 3) * mu(n)


def nu(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    value = _B[n // 2] if n % 2 == 0 else _NU_ODD[(n - 1) // 2]
    if 3 * mu(n) * value * value != cheb_a(n) - 2:
        raise ArithmeticError(f"u(n) != 3 mu(n) nu(n)^2 at n={n}")
    return value


@dataclass(frozen=True)
class ChebPair:
    """``u = 2 T_n(5/2) - 2`` and ``v = U_{n-1}(5/2)``."""

    n: int
    u: int
    v: int

    def __post_init__(self):
        u, v = self.u, self.v
        if u * u - 21 * v * v != -4 * u:
            raise ArithmeticError(f"u^2 - 21 v^2 != -4u at n={self.n}")
        if u < 0 or v < 0:
            raise ArithmeticError(f"negative Chebyshev value at n={self.n}")


def cheb_pair(n: int) -> ChebPair:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return ChebPair(n, cheb_a(n) - 2, cheb_b(n))


def valuation(x: int, p: int) -> int:
    """Largest ``e`` with ``p**e | x``; ``x`` must be nonzero."""
    if x == 0:
        raise ValueError("valuation of zero")
    x = abs(x)
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e
