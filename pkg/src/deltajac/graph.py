"""Delta-graphs Delta(n; k, l, m) and their Laplacians.

Vertex ``v_{x,y}`` (layer ``x`` in 1..3, ``y`` in Z_n) has index
``(x - 1) * n + y``.  Layer ``x`` is the circulant graph joining ``y`` to
``y + j(x)`` with ``j = (k, l, m)``; each column ``y`` carries a triangle.
When ``2 j(x) = 0 (mod n)`` the two cycle edges at a vertex land on the same
neighbour and are stored as a double edge.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd

from .linalg import Matrix, block, laurent_in_shift, neg, identity


class InvalidSpecError(ValueError):
    pass


@dataclass(frozen=True)
class DeltaGraphSpec:
    n: int
    k: int = 1
    l: int = 1
    m: int = 1

    def __post_init__(self):
        if self.n < 3:
            raise InvalidSpecError(f"n must be at least 3, got {self.n}")
        for name in ("k", "l", "m"):
            j = getattr(self, name)
            if j % self.n == 0:
                raise InvalidSpecError(f"jump {name}={j} is 0 mod {self.n} (loop)")
            object.__setattr__(self, name, j % self.n)

    @property
    def jumps(self) -> tuple[int, int, int]:
        return (self.k, self.l, self.m)

    @property
    def connected(self) -> bool:
        return is_connected(self)

    @property
    def is_torus(self) -> bool:
        """True for Delta(n; 1,1,1), the discrete torus C_3 x C_n.

        Only the literal jumps (1,1,1) qualify; (1, n-1, 1) builds the same
        graph but is not accepted by the torus-only methods.
        """
        return self.jumps == (1, 1, 1)

    def __str__(self) -> str:
        return f"Delta({self.n};{self.k},{self.l},{self.m})"


@dataclass(frozen=True)
class LabeledGraph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def degrees(self) -> list[int]:
        return [sum(row) for row in self.adjacency]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w, mult in enumerate(self.adjacency[v]):
                    if mult and not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(sorted(comp))
        return comps


def build_delta_graph(spec: DeltaGraphSpec) -> LabeledGraph:
    n = spec.n
    adj = [[0] * (3 * n) for _ in range(3 * n)]
    for x, j in enumerate(spec.jumps):
        for y in range(n):
            a, b = x * n + y, x * n + (y + j) % n
            adj[a][b] += 1
            adj[b][a] += 1
    for y in range(n):
        col = [y, n + y, 2 * n + y]
        for a in col:
            for b in col:
                if a != b:
                    adj[a][b] += 1
    return LabeledGraph(3 * n, tuple(tuple(row) for row in adj))


def is_connected(spec: DeltaGraphSpec) -> bool:
    return gcd(gcd(spec.k, spec.l), gcd(spec.m, spec.n)) == 1


def laplacian(g: LabeledGraph) -> Matrix:
    """``D - A`` for a loopless multigraph."""
    out = []
    for i, row in enumerate(g.adjacency):
        r = [-a for a in row]
        r[i] = sum(row)
        out.append(r)
    return out


def jump_block(n: int, j: int) -> Matrix:
    """``4I - T**j - T**-j``."""
    return laurent_in_shift(n, {0: 4, j: -1, -j: -1})


def delta_laplacian_blocks(spec: DeltaGraphSpec) -> Matrix:
    n = spec.n
    a, b, c = (jump_block(n, j) for j in spec.jumps)
    mi = neg(identity(n))
    return block([[a, mi, mi], [mi, b, mi], [mi, mi, c]])


def delta_laplacian(spec: DeltaGraphSpec) -> Matrix:
    return laplacian(build_delta_graph(spec))
