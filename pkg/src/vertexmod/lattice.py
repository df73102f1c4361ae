"""Coordinates on the doubly infinite discrete cylinder.

The cylinder is the plane Z^2 modulo the shift (m, n), for coprime positive
m, n.  Weights are assigned by the linear form (x, y) -> x*alpha + y*beta
with (alpha, beta) = (-n, m), the minimal integral pair killing the period.
Because gcd(m, n) = 1 the weight map is a bijection from cylinder faces
onto Z, which is what makes one-dimensional bookkeeping possible.

Drawing conventions (fixed once and used everywhere):

* face (x, y) is the unit square [x-1, x] x [y-1, y];
* vertex W(x, y) is the grid point (x, y), the common corner of faces
  (x, y), (x+1, y), (x, y+1), (x+1, y+1);
* vertical edge V(x, y) joins W(x, y-1) to W(x, y) and separates faces
  (x, y) and (x+1, y);
* horizontal edge H(x, y) joins W(x-1, y) to W(x, y) and separates faces
  (x, y) and (x, y+1).

Half-integer quantities (edge midpoints, vertex values) are stored doubled
so that everything stays in exact integer arithmetic:

    V(x, y) doubled midpoint = 2*(x*alpha + y*beta) + alpha
    H(x, y) doubled midpoint = 2*(x*alpha + y*beta) + beta
    W(x, y) doubled value    = 2*(x*alpha + y*beta) + alpha + beta
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import NamedTuple

VERTICAL = "V"
HORIZONTAL = "H"


class Face(NamedTuple):
    x: int
    y: int


class Edge(NamedTuple):
    kind: str  # "V" or "H"
    x: int
    y: int


class Vertex(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Lattice:
    """The period pair (m, n) with weight steps alpha = -n, beta = m."""

    m: int
    n: int
    alpha: int = field(init=False)
    beta: int = field(init=False)

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"period ({self.m}, {self.n}) must be positive in both entries")
        if gcd(self.m, self.n) != 1:
            raise ValueError(f"period ({self.m}, {self.n}) is not coprime")
        object.__setattr__(self, "alpha", -self.n)
        object.__setattr__(self, "beta", self.m)

    # -- weights ---------------------------------------------------------

    def face_weight(self, f) -> int:
        x, y = f
        return x * self.alpha + y * self.beta

    def edge_mid2(self, e: Edge) -> int:
        """Doubled midpoint weight of an edge."""
        kind, x, y = e
        base = 2 * (x * self.alpha + y * self.beta)
        if kind == VERTICAL:
            return base + self.alpha
        if kind == HORIZONTAL:
            return base + self.beta
        raise ValueError(f"bad edge kind {kind!r}")

    def vertex_val2(self, v) -> int:
        x, y = v
        return 2 * (x * self.alpha + y * self.beta) + self.alpha + self.beta

    # -- canonicalization --------------------------------------------------

    def canonicalize(self, f) -> tuple[Face, int]:
        """Fundamental-domain representative (0 <= x < m) and winding count.

        f == rep + k*(m, n) exactly.
        """
        x, y = f
        k = x // self.m
        return Face(x - k * self.m, y - k * self.n), k

    def canonical_edge(self, e: Edge) -> Edge:
        kind, x, y = e
        (cx, cy), _ = self.canonicalize((x, y))
        return Edge(kind, cx, cy)

    def canonical_vertex(self, v) -> Vertex:
        x, y = v
        (cx, cy), _ = self.canonicalize((x, y))
        return Vertex(cx, cy)

    # -- inverse maps (weight -> canonical object) -------------------------

    def face_of_weight(self, w: int) -> Face:
        """The unique canonical face of a given weight."""
        if self.n == 1:
            # w = -x + m*y with 0 <= x < m
            x = (-w) % self.m
        else:
            x = (-w * pow(self.n, -1, self.m)) % self.m
        y = (w + self.n * x) // self.m
        assert x * self.alpha + y * self.beta == w
        return Face(x, y)

    def edge_of_mid2(self, kind: str, mid2: int) -> Edge:
        step = self.alpha if kind == VERTICAL else self.beta
        if (mid2 - step) % 2 != 0:
            raise ValueError(f"{mid2} is not a doubled {kind}-edge midpoint")
        x, y = self.face_of_weight((mid2 - step) // 2)
        return Edge(kind, x, y)

    def vertex_of_val2(self, val2: int) -> Vertex:
        if (val2 - self.alpha - self.beta) % 2 != 0:
            raise ValueError(f"{val2} is not a doubled vertex value")
        x, y = self.face_of_weight((val2 - self.alpha - self.beta) // 2)
        return Vertex(x, y)


def new_lattice(m: int, n: int) -> Lattice:
    """Validating constructor, kept as a plain function for symmetry."""
    return Lattice(m, n)
