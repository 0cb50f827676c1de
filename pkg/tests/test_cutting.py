"""Cutting-sequence tests: continued fractions, AB words, LR words.

Both word constructions are checked against the geometric oracles,
which simulate a line of slope p/q crossing the integer grid (and the
diagonals y = x + c) using exact Fraction arithmetic.
"""

import math
from fractions import Fraction

import pytest

from modlink.cutting import (
    ABWord,
    ContinuedFraction,
    UnsupportedSlopeError,
    ab_sequence,
    ab_sequence_geometric,
    ab_to_lr,
    continued_fraction,
    lr_geometric_oracle,
    slope_to_word,
)
from modlink.farey import INFINITY, ONE, ZERO, NegativeSlopeError, Slope, v_orbit
from modlink.psl2z import GeodesicWord


def _reduced_positive(bound: int):
    for p in range(1, bound + 1):
        for q in range(1, bound + 1):
            if math.gcd(p, q) == 1:
                yield (p, q)


# --------------------------------------------------- continued fractions


def test_continued_fraction_examples():
    assert continued_fraction(Slope(3, 2)).terms == (1, 2)
    assert str(continued_fraction(Slope(3, 2))) == "[1, 2]"
    assert continued_fraction(ONE).terms == (1,)
    assert continued_fraction(Slope(1, 7)).terms == (0, 7)
    assert continued_fraction(Slope(2, 1)).terms == (2,)
    assert continued_fraction(ZERO).terms == (0,)


def test_continued_fraction_round_trip():
    for p, q in _reduced_positive(60):
        cf = continued_fraction(Slope(p, q))
        assert cf.value() == Fraction(p, q)
        assert all(t >= 1 for t in cf.terms[1:])


def test_continued_fraction_rejects_out_of_range():
    with pytest.raises(UnsupportedSlopeError):
        continued_fraction(INFINITY)
    with pytest.raises(UnsupportedSlopeError):
        continued_fraction(Slope(-3, 2))
    with pytest.raises(ValueError):
        ContinuedFraction((1, 0))
    with pytest.raises(ValueError):
        ContinuedFraction((-1,))


# -------------------------------------------------------------- AB words


def test_ab_worked_examples():
    assert ab_sequence(ONE) == ABWord("AB")
    assert ab_sequence(Slope(1, 2)) == ABWord("BAA")
    assert ab_sequence(Slope(2, 1)) == ABWord("ABB")
    assert ab_sequence(Slope(3, 2)) == ABWord("BABBA")
    for n in range(1, 11):
        assert ab_sequence(Slope(1, n)) == ABWord("B" + "A" * n)


def test_ab_letter_counts_are_crossing_counts():
    # q vertical crossings (A) and p horizontal crossings (B) per period
    for p, q in _reduced_positive(30):
        word = ab_sequence(Slope(p, q))
        assert word.a_count == q
        assert word.b_count == p
        assert len(word) == p + q


def test_ab_matches_geometric_oracle():
    for p, q in _reduced_positive(30):
        s = Slope(p, q)
        assert ab_sequence(s) == ab_sequence_geometric(s), s


def test_ab_word_validation():
    with pytest.raises(ValueError):
        ABWord("ABX")
    w = ABWord("ABBAB")
    assert w.a_count == 2 and w.b_count == 3
    assert w == ABWord("BABAB")


def test_ab_rejects_slopes_off_the_open_quadrant():
    for s in (ZERO, INFINITY):
        with pytest.raises(UnsupportedSlopeError):
            ab_sequence(s)
        with pytest.raises(UnsupportedSlopeError):
            ab_sequence_geometric(s)
    with pytest.raises(UnsupportedSlopeError):
        ab_sequence(Slope(-1, 2))


# -------------------------------------------------------------- LR words


def test_ab_to_lr_pair_rule():
    assert ab_to_lr(ABWord("AB")) == GeodesicWord("LR")
    assert ab_to_lr(ABWord("ABB")) == GeodesicWord("LLRR")
    assert ab_to_lr(ABWord("BAA")) == GeodesicWord("LLRR")
    assert ab_to_lr(ABWord("BABBA")) == GeodesicWord("LRLLRR")


def test_lr_worked_examples():
    assert slope_to_word(ONE) == GeodesicWord("LR")
    assert slope_to_word(Slope(1, 2)) == GeodesicWord("LLRR")
    assert slope_to_word(Slope(2, 1)) == GeodesicWord("LLRR")
    assert slope_to_word(Slope(3, 2)) == GeodesicWord("LRLLRR")
    assert slope_to_word(Slope(3, 1)) == GeodesicWord("LRRLLR")
    assert slope_to_word(Slope(1, 7)) == GeodesicWord("LR" + "RL" * 6)
    assert slope_to_word(Slope(1, 7)).canonical().letters == "LLRRLRLRLRLRLR"


def test_lr_base_slopes_give_the_trace_three_word():
    assert slope_to_word(ZERO) == GeodesicWord("LR")
    assert slope_to_word(INFINITY) == GeodesicWord("LR")


def test_lr_matches_geometric_oracle():
    for p, q in _reduced_positive(25):
        s = Slope(p, q)
        assert slope_to_word(s) == lr_geometric_oracle(s), s


def test_lr_word_length_and_letter_counts():
    for p, q in _reduced_positive(30):
        word = slope_to_word(Slope(p, q))
        assert len(word) == p + q + abs(p - q) == 2 * max(p, q)
        assert word.letters.count("L") == max(p, q)
        assert word.letters.count("R") == max(p, q)


def test_lr_mirror_symmetry():
    swap = str.maketrans("LR", "RL")
    for p, q in _reduced_positive(30):
        w = slope_to_word(Slope(p, q))
        m = slope_to_word(Slope(q, p))
        assert m == GeodesicWord(w.letters.translate(swap)), (p, q)


def test_lr_constant_on_v_orbits():
    # the two nonnegative members of each orbit name the same geodesic
    for p, q in _reduced_positive(30):
        s = Slope(p, q)
        others = [t for t in v_orbit(s) if t.p >= 0 and t != s]
        if s in (ZERO, ONE, INFINITY):
            continue
        assert len(others) == 1
        assert slope_to_word(others[0]) == slope_to_word(s), s


def test_lr_rejects_negative_slope():
    with pytest.raises(NegativeSlopeError):
        slope_to_word(Slope(-2, 1))


def test_lr_oracle_rejects_slopes_off_the_open_quadrant():
    for s in (ZERO, INFINITY):
        with pytest.raises(UnsupportedSlopeError):
            lr_geometric_oracle(s)
