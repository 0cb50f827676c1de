"""Cutting sequences of lattice lines and their translation to LR words.

A line of slope p/q > 0 through the square lattice, pushed off the
lattice points by an infinitesimal upward shift, crosses vertical lines
(letter A) and horizontal lines (letter B); one period gives a cyclic
word with q A's and p B's.  Reading cyclically consecutive letter pairs
translates this to the LR word of the corresponding conjugacy class.
Both steps have independent geometric simulations, written against the
lattice itself with exact rational arithmetic, to check the symbolic
algorithms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .farey import INFINITY, ZERO, NegativeSlopeError, Slope
from .psl2z import CyclicWord, GeodesicWord


class UnsupportedSlopeError(ValueError):
    """The slope has no cutting sequence of the requested kind."""


@dataclass(frozen=True)
class ContinuedFraction:
    """Euclidean continued-fraction digits [a1, a2, ..., ak].

    a1 >= 0 and all later digits are >= 1; the value reconstructs the
    slope exactly.
    """

    terms: tuple[int, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("empty continued fraction")
        if self.terms[0] < 0 or any(a < 1 for a in self.terms[1:]):
            raise ValueError(f"bad continued-fraction digits {self.terms}")

    def value(self) -> Fraction:
        acc = Fraction(self.terms[-1])
        for a in reversed(self.terms[:-1]):
            acc = a + 1 / acc
        return acc

    def __str__(self) -> str:
        return "[" + ", ".join(str(a) for a in self.terms) + "]"


def continued_fraction(s: Slope) -> ContinuedFraction:
    """Euclidean expansion of a nonnegative finite slope."""
    if s.is_infinity or s.p < 0:
        raise UnsupportedSlopeError(f"no continued fraction for {s}")
    terms = []
    p, q = s.p, s.q
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    return ContinuedFraction(tuple(terms))


class ABWord(CyclicWord):
    """Cyclic crossing word over {A, B}: A vertical, B horizontal."""

    _alphabet = frozenset("AB")

    @property
    def a_count(self) -> int:
        return self.letters.count("A")

    @property
    def b_count(self) -> int:
        return self.letters.count("B")


def _require_positive(s: Slope) -> None:
    if s.is_infinity or s.p <= 0:
        raise UnsupportedSlopeError(f"cutting sequence needs p, q >= 1, got {s}")


def _insert_b_after_each_a(word: str, count: int) -> str:
    if count == 0:
        return word
    tail = "B" * count
    return "".join(ch + tail if ch == "A" else ch for ch in word)


_AB_SWAP = str.maketrans("AB", "BA")


def ab_sequence(s: Slope) -> ABWord:
    """One period of the cutting sequence of slope p/q, p, q >= 1.

    Built from the continued-fraction digits: starting from the slope-0
    word "A", repeatedly insert the current digit's worth of B's into
    every gap between cyclically successive A's, then exchange the two
    letters, finishing with the leading digit and no final exchange.  A
    leading digit 0 (slope < 1) inserts nothing.
    """
    _require_positive(s)
    terms = continued_fraction(s).terms
    word = "A"
    for i, a in enumerate(reversed(terms)):
        word = _insert_b_after_each_a(word, a)
        if i < len(terms) - 1:
            word = word.translate(_AB_SWAP)
    return ABWord(word)


def _ab_events(p: int, q: int) -> list[tuple[tuple[Fraction, Fraction], str]]:
    """Sorted AB crossing events of one period, keyed by (x0, eps coeff)."""
    events = [((Fraction(k), Fraction(0)), "A") for k in range(1, q + 1)]
    events += [
        ((Fraction(m * q, p), Fraction(-q, p)), "B") for m in range(1, p + 1)
    ]
    events.sort(key=lambda ev: ev[0])
    return events


def ab_sequence_geometric(s: Slope) -> ABWord:
    """Crossing simulation of the line y = (p/q) x + eps over one period.

    Events are the crossings with vertical lines x = k (letter A) and
    horizontal lines y = m (letter B) for x in (0, q].  Each crossing
    abscissa has the exact form x0 + c*eps; sorting the pairs (x0, c)
    lexicographically realizes the infinitesimal offset symbolically.
    At the lattice corner this puts B just before A.
    """
    _require_positive(s)
    return ABWord("".join(letter for _, letter in _ab_events(s.p, s.q)))


_PAIR_RULE = {"AB": "L", "BA": "R", "AA": "RL", "BB": "LR"}


def ab_to_lr(word: ABWord) -> GeodesicWord:
    """Translate cyclically consecutive crossing pairs to an LR word.

    A then B contributes L; B then A contributes R; a repeated letter
    contributes the two-letter turn (RL after A, LR after B).  The last
    letter pairs with the first.  Result is in canonical rotation.
    """
    letters = word.letters
    n = len(letters)
    out = [_PAIR_RULE[letters[i] + letters[(i + 1) % n]] for i in range(n)]
    return GeodesicWord("".join(out)).canonical()


def slope_to_word(s: Slope) -> GeodesicWord:
    """Canonical LR word of a nonnegative slope.

    The two degenerate slopes 0/1 and 1/0 share the word LR with 1/1
    (all three lie in one rotation orbit).
    """
    if s.p < 0:
        raise NegativeSlopeError(f"no LR word for negative slope {s}")
    if s in (ZERO, INFINITY):
        return GeodesicWord("LR")
    return ab_to_lr(ab_sequence(s))


def _lr_events(
    p: int, q: int
) -> list[tuple[tuple[Fraction, Fraction], tuple[str, int]]]:
    """Sorted grid-line crossing events over two periods of the line.

    Grid lines are verticals x = k, horizontals y = m and the slope-one
    diagonals y = x + c; each event records the exact crossing abscissa
    as (x0, eps coefficient) plus the line crossed.
    """
    events: list[tuple[tuple[Fraction, Fraction], tuple[str, int]]] = []
    for k in range(1, 2 * q + 1):
        events.append(((Fraction(k), Fraction(0)), ("v", k)))
    for m in range(1, 2 * p + 1):
        events.append(((Fraction(m * q, p), Fraction(-q, p)), ("h", m)))
    if p > q:
        diag_levels = range(1, 2 * (p - q) + 1)
    elif p < q:
        diag_levels = range(0, 2 * (p - q), -1)
    else:
        diag_levels = range(0)
    for c in diag_levels:
        events.append(
            ((Fraction(c * q, p - q), Fraction(-q, p - q)), ("d", c))
        )
    events.sort(key=lambda ev: ev[0])
    return events


def lr_geometric_oracle(s: Slope) -> GeodesicWord:
    """LR word read off the triangulated lattice, one letter per triangle.

    The lattice squares are cut by the slope-one diagonals y = x + c into
    triangles.  The offset line of slope p/q crosses p + q + |p - q|
    triangle sides per period; between two consecutive crossings it cuts
    off exactly one corner, the intersection of the two crossed lines.
    The letter is L when that corner lies to the left of the directed
    line, R when on it or to the right (the offset pushes the line just
    above every lattice point).  This calibration gives slope 1/1 the
    word LR.
    """
    _require_positive(s)
    p, q = s.p, s.q
    events = _lr_events(p, q)
    n = p + q + abs(p - q)
    letters = []
    for i in range(n):
        vx, vy = _line_intersection(events[i][1], events[i + 1][1])
        letters.append("L" if q * vy - p * vx > 0 else "R")
    return GeodesicWord("".join(letters))


def _line_intersection(
    line1: tuple[str, int], line2: tuple[str, int]
) -> tuple[int, int]:
    """Lattice point where two grid lines (x=k, y=m or y=x+c) meet."""
    (kind1, i1), (kind2, i2) = sorted((line1, line2))
    if (kind1, kind2) == ("h", "v"):
        return (i2, i1)
    if (kind1, kind2) == ("d", "v"):
        return (i2, i2 + i1)
    if (kind1, kind2) == ("d", "h"):
        return (i2 - i1, i2)
    raise ValueError(f"parallel grid lines {line1}, {line2}")
