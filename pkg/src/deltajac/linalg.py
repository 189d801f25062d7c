"""Exact integer matrix arithmetic.

Matrices are plain lists of row lists holding Python ints, so every entry is
arbitrary precision.  Functions never mutate their arguments; elimination
routines work on private copies.

The shift matrix ``T = circ(0, 1, 0, ..., 0)`` acts as the left shift
``(x_0, ..., x_{n-1}) -> (x_1, ..., x_{n-1}, x_0)``, so ``T**e`` has its ones
at positions ``(i, i + e mod n)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from pathlib import Path
from typing import Iterable, Mapping

Matrix = list[list[int]]


@dataclass(frozen=True)
class SmithDecomposition:
    """Invariant factors of an integer matrix.

    ``invariant_factors`` holds the nonzero diagonal of the Smith form
    (units included) in divisibility order.  ``free_rank`` is the rank of the
    free part of the cokernel ``Z^rows / im(M)``.
    """

    invariant_factors: tuple[int, ...]
    free_rank: int

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d != 1)


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def _check_square(m: Matrix) -> int:
    r, c = shape(m)
    if r != c:
        raise ValueError(f"expected a square matrix, got {r}x{c}")
    return r


def copy(m: Matrix) -> Matrix:
    return [list(row) for row in m]


def zeros(rows: int, cols: int | None = None) -> Matrix:
    return [[0] * (rows if cols is None else cols) for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def scalar(c: int, n: int) -> Matrix:
    return [[c if i == j else 0 for j in range(n)] for i in range(n)]


def add(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise ValueError(f"shape mismatch {shape(a)} vs {shape(b)}")
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise ValueError(f"shape mismatch {shape(a)} vs {shape(b)}")
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def neg(a: Matrix) -> Matrix:
    return [[-x for x in row] for row in a]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col) if x and y) for col in bt] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def block(blocks: list[list[Matrix]]) -> Matrix:
    """Assemble a matrix from a grid of equally tall/wide blocks."""
    out: Matrix = []
    for block_row in blocks:
        height = len(block_row[0])
        for i in range(height):
            row: list[int] = []
            for b in block_row:
                row.extend(b[i])
            out.append(row)
    return out


def circulant(first_row: Iterable[int], n: int) -> Matrix:
    """``circ(a_0, ..., a_{n-1})``: row ``i`` is row 0 cyclically shifted right by ``i``."""
    a = list(first_row)
    if len(a) != n:
        raise ValueError(f"first row has length {len(a)}, expected {n}")
    return [[a[(j - i) % n] for j in range(n)] for i in range(n)]


def shift_matrix(n: int, power: int = 1) -> Matrix:
    row = [0] * n
    row[power % n] = 1
    return circulant(row, n)


def laurent_in_shift(n: int, coeffs: Mapping[int, int]) -> Matrix:
    """Evaluate the Laurent polynomial ``sum c_e z**e`` at the n x n shift matrix."""
    if n < 1:
        raise ValueError("n must be positive")
    row = [0] * n
    for e, c in coeffs.items():
        row[e % n] += c
    return circulant(row, n)


def determinant(m: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = _check_square(m)
    if n == 0:
        return 1
    a = copy(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _min_nonzero(a: Matrix, t: int) -> tuple[int, int] | None:
    best = None
    best_val = 0
    for i in range(t, len(a)):
        row = a[i]
        for j in range(t, len(row)):
            x = row[j]
            if x:
                ax = abs(x)
                if best is None or ax < best_val:
                    best, best_val = (i, j), ax
                    if ax == 1:
                        return best
    return best


def _diagonalize(m: Matrix) -> list[int]:
    """Reduce to diagonal form by unimodular row/column operations.

    Pivots are always the entry of least absolute value, which keeps the
    intermediate entries small.  The diagonal is returned without imposing
    the divisibility chain.
    """
    a = copy(m)
    rows, cols = shape(a)
    diag: list[int] = []
    for t in range(min(rows, cols)):
        pos = _min_nonzero(a, t)
        if pos is None:
            break
        i, j = pos
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            pivot_row = a[t]
            clean = True
            for i in range(t + 1, rows):
                row = a[i]
                x = row[t]
                if x:
                    q = x // p
                    if q:
                        for j in range(t, cols):
                            if pivot_row[j]:
                                row[j] -= q * pivot_row[j]
                    if row[t]:
                        clean = False
            for j in range(t + 1, cols):
                x = pivot_row[j]
                if x:
                    q = x // p
                    if q:
                        for i in range(t, rows):
                            y = a[i][t]
                            if y:
                                a[i][j] -= q * y
                    if pivot_row[j]:
                        clean = False
            if clean:
                break
            # a remainder survived: move the smallest entry of row/column t to the pivot
            bi, bj, bv = t, t, abs(p)
            for i in range(t + 1, rows):
                x = a[i][t]
                if x and abs(x) < bv:
                    bi, bj, bv = i, t, abs(x)
            for j in range(t + 1, cols):
                x = pivot_row[j]
                if x and abs(x) < bv:
                    bi, bj, bv = t, j, abs(x)
            if bi != t:
                a[t], a[bi] = a[bi], a[t]
            elif bj != t:
                for row in a:
                    row[t], row[bj] = row[bj], row[t]
        diag.append(abs(a[t][t]))
    return diag


def divisibility_chain(values: Iterable[int]) -> list[int]:
    """Rearrange positive cyclic orders into an equivalent chain ``d_1 | d_2 | ...``.

    Uses ``Z_a + Z_b = Z_gcd(a,b) + Z_lcm(a,b)`` pairwise; the multiset of
    prime-power components is preserved, so the group is unchanged.
    """
    d = sorted(values)
    if any(x <= 0 for x in d):
        raise ValueError("cyclic orders must be positive")
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            a, b = d[i], d[j]
            if b % a:
                g = gcd(a, b)
                d[i], d[j] = g, a // g * b
    return d


def smith_normal_form(m: Matrix) -> SmithDecomposition:
    rows, _ = shape(m)
    diag = [d for d in _diagonalize(m) if d]
    return SmithDecomposition(tuple(divisibility_chain(diag)), rows - len(diag))


def minors(m: Matrix, k: int) -> Iterable[int]:
    rows, cols = shape(m)
    for ri in combinations(range(rows), k):
        for ci in combinations(range(cols), k):
            yield determinant([[m[i][j] for j in ci] for i in ri])


def minors_matrix(m: Matrix, k: int) -> Matrix:
    """All k x k minors, rows/columns indexed by index subsets in lexicographic order."""
    rows, cols = shape(m)
    rsets = list(combinations(range(rows), k))
    csets = list(combinations(range(cols), k))
    return [[determinant([[m[i][j] for j in cs] for i in rs]) for cs in csets] for rs in rsets]


def minors_gcd(m: Matrix, k: int) -> int:
    """gcd of all k x k minors (0 when every such minor vanishes)."""
    rows, cols = shape(m)
    if not 1 <= k <= min(rows, cols):
        raise ValueError(f"k={k} out of range for a {rows}x{cols} matrix")
    g = 0
    for d in minors(m, k):
        g = gcd(g, d)
    return g


def matrix_power(m: Matrix, e: int) -> Matrix:
    n = _check_square(m)
    if e < 0:
        raise ValueError("negative exponent")
    result = identity(n)
    base = copy(m)
    while e:
        if e & 1:
            result = matmul(result, base)
        e >>= 1
        if e:
            base = matmul(base, base)
    return result


def matrix_power_minus_identity(m: Matrix, n: int) -> Matrix:
    """``M**n - I`` by exact binary exponentiation."""
    size = _check_square(m)
    if n < 1:
        raise ValueError("n must be at least 1")
    return sub(matrix_power(m, n), identity(size))


def format_matrix(m: Matrix) -> str:
    r, c = shape(m)
    lines = [f"{r} {c}"]
    lines.extend(" ".join(str(x) for x in row) for row in m)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Matrix:
    """Parse the plain-text fixture format: ``rows cols`` then whitespace-separated rows."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("missing 'rows cols' header")
    r, c = int(tokens[0]), int(tokens[1])
    body = [int(t) for t in tokens[2:]]
    if len(body) != r * c:
        raise ValueError(f"expected {r * c} entries, found {len(body)}")
    return [body[i * c:(i + 1) * c] for i in range(r)]


def read_matrix(path: str | Path) -> Matrix:
    return parse_matrix(Path(path).read_text())


def write_matrix(path: str | Path, m: Matrix) -> None:
    Path(path).write_text(format_matrix(m))
