"""Words in the parabolic generators L, R and their PSL(2, Z) matrices.

A cyclic word over {L, R} containing both letters determines a
hyperbolic conjugacy class; its trace is invariant under rotation of the
word, the translation length of the closed geodesic is a function of
the trace alone, and trace^2 - 4 determines the real quadratic field of
the axis endpoints.  Matrices are exact (Python integers are unbounded)
and are kept in a normalized sign convention so that equality of values
is equality in PSL(2, Z).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar


class NotHyperbolicError(ValueError):
    """The element has no closed hyperbolic geodesic."""


class ParabolicError(NotHyperbolicError):
    """Trace 2: parabolic (or a conjugate of a power of L or R)."""


class EllipticError(NotHyperbolicError):
    """Trace < 2: elliptic or the identity."""


@dataclass(frozen=True)
class MatrixPSL2Z:
    """Integer matrix (a b; c d) with det 1, normalized up to overall sign.

    The representative with a + d > 0 is stored; for trace zero, the one
    whose first nonzero entry among (a, b, c) is positive.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        if a * d - b * c != 1:
            raise ValueError(f"determinant is {a * d - b * c}, not 1")
        t = a + d
        flip = t < 0
        if t == 0:
            for entry in (a, b, c):
                if entry:
                    flip = entry < 0
                    break
        if flip:
            a, b, c, d = -a, -b, -c, -d
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def identity(cls) -> "MatrixPSL2Z":
        return cls(1, 0, 0, 1)

    def __mul__(self, other: "MatrixPSL2Z") -> "MatrixPSL2Z":
        return MatrixPSL2Z(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def trace(self) -> int:
        """a + d of the normalized representative (always >= 0)."""
        return self.a + self.d

    def __str__(self) -> str:
        return f"({self.a} {self.b}; {self.c} {self.d})"


_GENERATOR_ENTRIES = {
    "L": (1, 1, 0, 1),
    "R": (1, 0, 1, 1),
    "U": (0, -1, 1, 0),
    "V": (0, -1, 1, -1),
}


def generator(name: str) -> MatrixPSL2Z:
    """Normalized matrix of a named generator: L, R, U or V.

    L and R are the parabolic generators; U is the order-two and V the
    order-three rotation, with L = V^2 U and R = V U.
    """
    try:
        return MatrixPSL2Z(*_GENERATOR_ENTRIES[name])
    except KeyError:
        raise ValueError(f"unknown generator {name!r}") from None


def least_rotation(s: str) -> str:
    """Lexicographically least rotation of s, in O(len(s)) (Booth)."""
    ss = s + s
    f = [-1] * len(ss)
    k = 0
    for j in range(1, len(ss)):
        sj = ss[j]
        i = f[j - k - 1]
        while i != -1 and sj != ss[k + i + 1]:
            if sj < ss[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != ss[k + i + 1]:
            if sj < ss[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return s[k:] + s[:k]


@dataclass(frozen=True, eq=False)
class CyclicWord:
    """A nonempty cyclic word; equality and hashing ignore rotation."""

    letters: str

    _alphabet: ClassVar[frozenset] = frozenset()

    def __post_init__(self):
        if not self.letters:
            raise ValueError("empty word")
        bad = set(self.letters) - self._alphabet
        if bad:
            raise ValueError(f"letters {sorted(bad)} not in {sorted(self._alphabet)}")

    @cached_property
    def _canonical_letters(self) -> str:
        return least_rotation(self.letters)

    def canonical(self) -> "CyclicWord":
        """The representative spelled as the least rotation."""
        return type(self)(self._canonical_letters)

    def rotated(self, k: int) -> "CyclicWord":
        k %= len(self.letters)
        return type(self)(self.letters[k:] + self.letters[:k])

    def __eq__(self, other) -> bool:
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._canonical_letters == other._canonical_letters

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._canonical_letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters


class GeodesicWord(CyclicWord):
    """Cyclic word over {L, R} naming a conjugacy class in PSL(2, Z)."""

    _alphabet = frozenset("LR")

    @property
    def is_hyperbolic(self) -> bool:
        """Both letters occur, so the trace exceeds 2."""
        return "L" in self.letters and "R" in self.letters


def canonical_cyclic(word: GeodesicWord) -> GeodesicWord:
    """Least-rotation representative (L sorts before R)."""
    return word.canonical()


def word_to_matrix(word: "GeodesicWord | str") -> MatrixPSL2Z:
    """Left-to-right product of generator matrices for the word.

    Words in positive powers of L and R give matrices with nonnegative
    entries; the trace depends only on the rotation class.
    """
    if isinstance(word, str):
        word = GeodesicWord(word)
    m = MatrixPSL2Z.identity()
    for ch in word.letters:
        m = m * generator(ch)
    return m


def trace_length(t: int) -> float:
    """Translation length 2*ln((t + sqrt(t^2 - 4))/2) of a trace-t element.

    Exact for any integer trace: beyond floating-point range the square
    root factor is 1 to double precision and ln of the unbounded integer
    is taken directly, preserving at least 12 significant digits.
    """
    if t == 2:
        raise ParabolicError("trace 2 is parabolic: no closed geodesic")
    if t < 2:
        raise EllipticError(f"trace {t} < 2 is elliptic or the identity")
    if t.bit_length() <= 500:
        x = float(t)
        return 2.0 * math.log((x + math.sqrt(x * x - 4.0)) / 2.0)
    # (t + sqrt(t^2-4))/2 = t to within 1 part in t^2 here
    return 2.0 * math.log(t)


def geodesic_length(m: MatrixPSL2Z) -> float:
    """Length of the closed geodesic of a hyperbolic matrix."""
    return trace_length(m.trace())


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Miller-Rabin; the fixed witness set is deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = ((d & -d).bit_length()) - 1
    d >>= r
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of an odd composite n with no tiny divisors."""
    for c in itertools.count(1):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization: trial division, then Pollard rho above 10^6."""
    factors: dict[int, int] = {}
    for d in (2, 3, 5):
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
    d = 7
    while d * d <= n and d < 1000:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 2
    pending = [n] if n > 1 else []
    while pending:
        m = pending.pop()
        if m == 1:
            continue
        if _is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        f = _pollard_rho(m)
        pending.extend((f, m // f))
    return factors


def squarefree_part(n: int) -> int:
    """Product of the primes dividing n to an odd power."""
    if n < 1:
        raise ValueError("positive integer required")
    result = 1
    for prime, exp in _factorize(n).items():
        if exp % 2:
            result *= prime
    return result


def field_discriminant(m: MatrixPSL2Z) -> int:
    """Squarefree d with Q(sqrt(trace^2 - 4)) = Q(sqrt(d)).

    The eigenvalues (t +- sqrt(t^2 - 4))/2 generate this real quadratic
    field.  Factoring t - 2 and t + 2 separately keeps the trial
    division bound at sqrt(t) rather than t; cost still grows quickly
    with word length.
    """
    t = m.trace()
    if t == 2:
        raise ParabolicError("trace 2 is parabolic: field degenerates")
    if t < 2:
        raise EllipticError(f"trace {t} < 2 is elliptic or the identity")
    merged = _factorize(t - 2)
    for prime, exp in _factorize(t + 2).items():
        merged[prime] = merged.get(prime, 0) + exp
    result = 1
    for prime, exp in merged.items():
        if exp % 2:
            result *= prime
    return result
