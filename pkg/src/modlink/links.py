"""Link families fibred by octahedra over Farey triangle paths.

A triangle path of length x, closed up under the order-three rotation,
yields 3x slopes arranged in a cyclic Farey chain, x rotation orbits of
geodesics, and a decomposition of the link complement into ideal
octahedra: x of them in the quotient, 3x in the single-orientation
cover, 6x upstairs.  The volume of a regular ideal octahedron is
4 * Catalan; the quotient volume reported here is x times that, with
the alternative halved normalization (which also appears in the
literature) carried alongside rather than adjudicated.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterator

from .cutting import slope_to_word
from .farey import (
    ONE,
    FareyPath,
    NotNeighboursError,
    Slope,
    farey_path,
    is_farey_neighbour,
    mediant,
    order_as_farey_chain,
    v_orbit,
    v_rotate,
)
from .psl2z import (
    GeodesicWord,
    field_discriminant,
    geodesic_length,
    word_to_matrix,
)


@cache
def _catalan() -> float:
    """Catalan's constant by the accelerated central-binomial series.

    G = (pi/8) ln(2 + sqrt 3) + (3/8) sum 1/((2n+1)^2 C(2n,n)); the sum
    is accumulated as an exact rational (terms shrink like 4^-n), so the
    only rounding is in the closed transcendental part.
    """
    acc = Fraction(0)
    for n in range(40):
        acc += Fraction(1, (2 * n + 1) ** 2 * math.comb(2 * n, n))
    return math.pi / 8 * math.log(2 + math.sqrt(3)) + 3 / 8 * float(acc)


def v_oct() -> float:
    """Volume of the regular ideal octahedron, 4 * Catalan."""
    return 4 * _catalan()


@dataclass(frozen=True)
class OctahedralBlock:
    """One octahedron of the decomposition, spanning a chain edge.

    The chart matrix has the bottom and top slopes as integer columns;
    its determinant is +-1 because the two slopes are Farey neighbours.
    """

    bottom: Slope
    top: Slope

    def __post_init__(self):
        if not is_farey_neighbour(self.bottom, self.top):
            raise NotNeighboursError(
                f"block edge {self.bottom}, {self.top} is not a Farey edge"
            )

    @property
    def chart(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.bottom.p, self.top.p), (self.bottom.q, self.top.q))

    @property
    def chart_det(self) -> int:
        return self.bottom.p * self.top.q - self.bottom.q * self.top.p


@dataclass(frozen=True)
class OrbitRecord:
    """A rotation orbit of slopes and its geodesic invariants."""

    representative: Slope
    slopes: tuple[Slope, ...]
    word: GeodesicWord
    trace: int
    length: float
    discriminant: int


@dataclass(frozen=True)
class OctahedronCounts:
    modular: int
    ut_single: int
    ut_both: int


@dataclass(frozen=True)
class LinkFamily:
    """Full record of the link family determined by one target slope."""

    target: Slope
    path: FareyPath
    x: int
    slopes: tuple[Slope, ...]
    orbits: tuple[OrbitRecord, ...]
    blocks: tuple[OctahedralBlock, ...]
    counts: OctahedronCounts
    volume_modular: float
    total_length: float

    @property
    def volume_alternative(self) -> float:
        """The halved normalization x * v_oct / 2, reported alongside."""
        return self.volume_modular / 2

    @property
    def ratio(self) -> float:
        """volume / sqrt(total geodesic length)."""
        return self.volume_modular / math.sqrt(self.total_length)


def build_family(target: Slope) -> LinkFamily:
    """Construct the link family of a nonnegative target slope.

    Takes the Farey path to the target, closes its 2 + x vertex slopes
    under the order-three rotation to exactly 3x slopes, checks that
    sorted they form a cyclic Farey chain invariant under the rotation,
    partitions them into x orbits (the orbit of the base triangle first,
    then one per new path vertex), and assembles the octahedral blocks,
    counts and volumes.
    """
    path = farey_path(target)
    x = path.x

    closure: set[Slope] = set()
    for s in path.slopes():
        closure |= v_orbit(s)
    if len(closure) != 3 * x:
        raise RuntimeError(
            f"rotation closure of {target} has {len(closure)} slopes, expected {3 * x}"
        )
    if {v_rotate(s) for s in closure} != closure:
        raise RuntimeError(f"rotation closure of {target} is not rotation-invariant")
    chain = order_as_farey_chain(closure)

    orbits = []
    seen: set[Slope] = set()
    for rep in (ONE,) + path.new_vertices:
        orbit = v_orbit(rep)
        if orbit & seen:
            raise RuntimeError(f"orbit of {rep} overlaps a previous orbit")
        seen |= orbit
        word = slope_to_word(rep).canonical()
        matrix = word_to_matrix(word)
        orbits.append(
            OrbitRecord(
                representative=rep,
                slopes=tuple(sorted(orbit)),
                word=word,
                trace=matrix.trace(),
                length=geodesic_length(matrix),
                discriminant=field_discriminant(matrix),
            )
        )

    blocks = tuple(
        OctahedralBlock(chain[i], chain[(i + 1) % len(chain)])
        for i in range(len(chain))
    )
    return LinkFamily(
        target=target,
        path=path,
        x=x,
        slopes=tuple(chain),
        orbits=tuple(orbits),
        blocks=blocks,
        counts=OctahedronCounts(modular=x, ut_single=3 * x, ut_both=6 * x),
        volume_modular=x * v_oct(),
        total_length=sum(r.length for r in orbits),
    )


def gamma_sequence(n: int) -> LinkFamily:
    """Family of the first n geodesic words LR, LRRL, LR(RL)^2, ...

    Equivalently build_family(1/n): the path to 1/n passes through
    1/2, ..., 1/(n-1), and the k-th orbit word is LR(RL)^(k-1).  The
    word pattern is verified here rather than assumed.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    family = build_family(Slope(1, n))
    expected = [GeodesicWord("LR" + "RL" * k) for k in range(n)]
    actual = [record.word for record in family.orbits]
    if actual != expected:
        raise RuntimeError(f"orbit words of 1/{n} deviate from LR(RL)^(k-1)")
    return family


@dataclass(frozen=True)
class VolumeRow:
    n: int
    word: GeodesicWord
    trace: int
    length: float
    cumulative_length: float
    octahedra: int
    volume: float
    volume_alternative: float
    ratio: float


@dataclass(frozen=True)
class VolumeReport:
    """Volume versus cumulative geodesic length for the tower of families."""

    rows: tuple[VolumeRow, ...]
    v_oct: float


def volume_length_table(n_max: int) -> VolumeReport:
    """Rows n = 1..n_max of trace, length, volume and volume/sqrt(length)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    cumulative = 0.0
    for n in range(1, n_max + 1):
        word = GeodesicWord("LR" + "RL" * (n - 1)).canonical()
        matrix = word_to_matrix(word)
        length = geodesic_length(matrix)
        cumulative += length
        volume = n * v_oct()
        rows.append(
            VolumeRow(
                n=n,
                word=word,
                trace=matrix.trace(),
                length=length,
                cumulative_length=cumulative,
                octahedra=n,
                volume=volume,
                volume_alternative=volume / 2,
                ratio=volume / math.sqrt(cumulative),
            )
        )
    return VolumeReport(tuple(rows), v_oct())


_MIRROR_CHOICES = str.maketrans("LR", "RL")


def _census_target(choices: str) -> Slope:
    """Target slope of a depth-(len+1) path picked by left/right choices."""
    if not choices:
        return ONE
    lo, hi = (Slope(0, 1), ONE) if choices[0] == "L" else (ONE, Slope(1, 0))
    for pick in choices[1:]:
        m = mediant(lo, hi)
        if pick == "L":
            hi = m
        else:
            lo = m
    return mediant(lo, hi)


def census(max_x: int, dedupe_mirror: bool = False) -> Iterator[LinkFamily]:
    """All families of depth 1..max_x, by depth then choice string.

    Depth x contributes the 2^(x-1) binary descent choices from the base
    triangle.  With dedupe_mirror, of each pair of families related by
    swapping every left/right choice (equivalently p/q <-> q/p) only the
    lexicographically earlier one is emitted.
    """
    if max_x < 1:
        raise ValueError("max_x must be >= 1")
    for depth in range(1, max_x + 1):
        for picks in itertools.product("LR", repeat=depth - 1):
            choices = "".join(picks)
            if dedupe_mirror and choices.translate(_MIRROR_CHOICES) < choices:
                continue
            yield build_family(_census_target(choices))


@dataclass(frozen=True)
class CoverScale:
    """Octahedron count and volume scaled to a finite cover."""

    degree: int
    octahedra: int
    volume: float


def cover_scale(family: LinkFamily, degree: int) -> CoverScale:
    """Counts and volume in a degree-d cover: d*x octahedra, d*x*v_oct."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    return CoverScale(
        degree=degree,
        octahedra=degree * family.x,
        volume=degree * family.x * v_oct(),
    )
