"""Exact rational slopes and the combinatorics of the Farey tessellation.

Slopes p/q (with 1/0 standing for the vertical curve) label the ideal
vertices of the Farey tessellation of the hyperbolic plane; two slopes
span an edge exactly when |ps - qr| = 1, and every triangle is a triple
of mutual neighbours.  An order-three rotation V permutes slopes around
the triangle (0/1, 1/1, 1/0).  Everything here is exact integer
arithmetic on immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable


class NotNeighboursError(ValueError):
    """The two slopes do not span an edge of the Farey tessellation."""


class NegativeSlopeError(ValueError):
    """Operation is defined only for nonnegative slopes (or 1/0)."""


class NotAChainError(ValueError):
    """A cyclically consecutive pair fails the Farey-neighbour test."""

    def __init__(self, a: "Slope", b: "Slope"):
        super().__init__(f"not Farey neighbours: {a}, {b}")
        self.pair = (a, b)


@total_ordering
@dataclass(frozen=True)
class Slope:
    """A reduced rational slope p/q, with q >= 0 and 1/0 for infinity.

    Construction normalizes silently: the sign lives in the numerator,
    gcd(|p|, q) == 1, and any n/0 collapses to 1/0.  0/0 is rejected.
    Slopes are totally ordered by value with 1/0 strictly greatest.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise ValueError("slope 0/0 is not defined")
        if q == 0:
            p = 1
        else:
            if q < 0:
                p, q = -p, -q
            g = math.gcd(p, q)
            p //= g
            q //= g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse 'p/q' with an optional sign, e.g. '-2/1' or '1/0'."""
        num, sep, den = text.strip().partition("/")
        if not sep:
            raise ValueError(f"malformed slope {text!r}: expected 'p/q'")
        try:
            return cls(int(num), int(den))
        except ValueError as exc:
            raise ValueError(f"malformed slope {text!r}: {exc}") from None

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    def __lt__(self, other: "Slope") -> bool:
        if self.q == 0:
            return False
        if other.q == 0:
            return True
        return self.p * other.q < other.p * self.q

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


ZERO = Slope(0, 1)
ONE = Slope(1, 1)
INFINITY = Slope(1, 0)


def is_farey_neighbour(a: Slope, b: Slope) -> bool:
    """True when a and b span an edge of the tessellation (|ps - qr| = 1)."""
    return abs(a.p * b.q - a.q * b.p) == 1


def mediant(a: Slope, b: Slope) -> Slope:
    """Mediant (p1+p2)/(q1+q2) of two Farey neighbours.

    The mediant of neighbours is automatically reduced and is itself a
    neighbour of both parents.
    """
    if not is_farey_neighbour(a, b):
        raise NotNeighboursError(f"{a} and {b} are not Farey neighbours")
    return Slope(a.p + b.p, a.q + b.q)


def v_rotate(s: Slope) -> Slope:
    """Order-three rotation p/q -> q/(q - p) about the base triangle."""
    return Slope(s.q, s.q - s.p)


def v_orbit(s: Slope) -> frozenset[Slope]:
    """The orbit {s, V(s), V^2(s)} of the order-three rotation."""
    t = v_rotate(s)
    return frozenset((s, t, v_rotate(t)))


def nonnegative_representative(s: Slope) -> Slope:
    """Least member of v_orbit(s) with p >= 0.  Every orbit has one."""
    return min(t for t in v_orbit(s) if t.p >= 0)


@dataclass(frozen=True)
class FareyTriangle:
    """Three pairwise-neighbouring slopes, stored in ascending order."""

    vertices: tuple[Slope, Slope, Slope]

    def __post_init__(self):
        vs = tuple(sorted(self.vertices))
        if len(set(vs)) != 3:
            raise ValueError(f"degenerate triangle {vs}")
        for i in range(3):
            a, b = vs[i], vs[(i + 1) % 3]
            if not is_farey_neighbour(a, b):
                raise NotNeighboursError(f"{a} and {b} are not Farey neighbours")
        object.__setattr__(self, "vertices", vs)

    def __contains__(self, s: Slope) -> bool:
        return s in self.vertices

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.vertices) + ")"


def base_triangle() -> FareyTriangle:
    return FareyTriangle((ZERO, ONE, INFINITY))


@dataclass(frozen=True)
class FareyPath:
    """Triangle path from the base triangle to one containing the target.

    Consecutive triangles share an edge; each step introduces exactly one
    new vertex (the mediant of the shared edge), recorded in order in
    ``new_vertices``.  ``x`` counts triangles, so the path visits 2 + x
    distinct slopes.
    """

    triangles: tuple[FareyTriangle, ...]
    target: Slope
    new_vertices: tuple[Slope, ...]

    @property
    def x(self) -> int:
        return len(self.triangles)

    def slopes(self) -> tuple[Slope, ...]:
        """All distinct vertex slopes, in order of first appearance."""
        return (ZERO, ONE, INFINITY) + self.new_vertices


def farey_path(target: Slope) -> FareyPath:
    """Shortest triangle path from the base triangle to the target slope.

    The dual graph of the tessellation is a tree, so the shortest path is
    unique; it is produced directly by mediant (continued-fraction)
    descent.  Targets already on the base triangle give the one-triangle
    path.
    """
    if target.p < 0:
        raise NegativeSlopeError(f"no Farey path to negative slope {target}")
    triangles = [base_triangle()]
    new_vertices: list[Slope] = []
    if target not in triangles[0]:
        lo, hi = (ZERO, ONE) if target < ONE else (ONE, INFINITY)
        while True:
            m = mediant(lo, hi)
            triangles.append(FareyTriangle((lo, m, hi)))
            new_vertices.append(m)
            if m == target:
                break
            if target < m:
                hi = m
            else:
                lo = m
    return FareyPath(tuple(triangles), target, tuple(new_vertices))


def order_as_farey_chain(slopes: Iterable[Slope]) -> list[Slope]:
    """Sort slopes ascending and verify cyclic consecutive neighbourliness.

    The last slope (1/0 when present) must also neighbour the first.
    Raises NotAChainError naming the first failing pair.
    """
    chain = sorted(set(slopes))
    if len(chain) < 2:
        raise ValueError("a Farey chain needs at least two distinct slopes")
    for a, b in zip(chain, chain[1:] + chain[:1]):
        if not is_farey_neighbour(a, b):
            raise NotAChainError(a, b)
    return chain
