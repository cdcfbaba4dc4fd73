"""Core word utilities: alphabets, cube detection, periodicity.

Words are plain Python strings over the letters ``'a', 'b', 'c', ...``
(letter index i is rendered as ``chr(ord('a') + i)``).  All positions
reported by this package are 1-based, matching the usual w[1..n]
convention of combinatorics on words; internally slices are 0-based.
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

MAX_ALPHABET = 26

# Below this length the plain scanning loop beats numpy dispatch overhead.
_NUMPY_THRESHOLD = 512


@dataclass(frozen=True)
class Alphabet:
    """The alphabet {a, b, c, ...} of a given size (2..26).

    Indices 0 and 1 are the distinguished letters a and b; every further
    letter ('c' onwards) is a "c-letter".
    """

    size: int

    def __post_init__(self) -> None:
        if not 2 <= self.size <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in 2..{MAX_ALPHABET}, got {self.size}")

    @property
    def letters(self) -> str:
        return string.ascii_lowercase[: self.size]

    @property
    def c_letters(self) -> str:
        return self.letters[2:]

    def __contains__(self, letter: str) -> bool:
        return len(letter) == 1 and letter in self.letters


class CubeWitness(NamedTuple):
    """Location of a cube factor: w[position .. position+3*period-1] = x^3."""

    position: int  # 1-based start
    period: int  # |x|

    def root(self, w: str) -> str:
        return w[self.position - 1 : self.position - 1 + self.period]


class PeriodicSuffix(NamedTuple):
    """Longest suffix of a word having a given period (vacuous if length <= period)."""

    period: int
    length: int


def letters_of(d: int) -> str:
    """The first d letters, validating the alphabet size."""
    return Alphabet(d).letters


def is_c_letter(letter: str) -> bool:
    return letter >= "c"


def infer_alphabet(w: str) -> int:
    """Smallest valid alphabet size containing every letter of w (at least 2)."""
    top = max((ord(ch) - ord("a") for ch in w), default=-1)
    return max(2, top + 1)


def validate_word(w: str, d: int | None = None) -> int:
    """Check that w is a word over the alphabet of size d; return the effective size.

    With d=None the alphabet is inferred from the letters actually used.
    """
    for ch in w:
        if not "a" <= ch <= "z":
            raise ValueError(f"invalid letter {ch!r} in word {w!r}")
    need = infer_alphabet(w)
    if d is None:
        return need
    Alphabet(d)
    if need > d:
        raise ValueError(f"word {w!r} uses letters outside the {d}-letter alphabet")
    return d


def reverse(w: str) -> str:
    """Letter-by-letter reversal (an involution)."""
    return w[::-1]


def _find_cube_scan(w: str) -> CubeWitness | None:
    n = len(w)
    for i in range(n):
        for p in range(1, (n - i) // 3 + 1):
            if w[i : i + p] == w[i + p : i + 2 * p] == w[i + 2 * p : i + 3 * p]:
                return CubeWitness(i + 1, p)
    return None


def _find_cube_vectorised(w: str) -> CubeWitness | None:
    arr = np.frombuffer(w.encode("ascii"), dtype=np.uint8)
    n = arr.size
    best: tuple[int, int] | None = None  # (0-based start, period)
    for p in range(1, n // 3 + 1):
        if best is not None and best[0] == 0:
            break  # nothing can precede position 0, and smaller p was tried first
        m = arr[p:] == arr[:-p]
        c = np.cumsum(m)
        carried = np.maximum.accumulate(np.where(m, 0, c))
        runs = c - carried  # consecutive matches ending at each offset
        hits = np.flatnonzero(runs >= 2 * p)
        if hits.size:
            start = int(hits[0]) - 2 * p + 1
            if best is None or start < best[0]:
                best = (start, p)
    if best is None:
        return None
    return CubeWitness(best[0] + 1, best[1])


def find_cube(w: str) -> CubeWitness | None:
    """Leftmost cube occurrence (ties broken by smallest period), or None."""
    if len(w) < _NUMPY_THRESHOLD:
        return _find_cube_scan(w)
    return _find_cube_vectorised(w)


def is_cube_free(w: str) -> bool:
    """True iff no factor of w is a cube.  The empty word is cube-free."""
    return find_cube(w) is None


def append_check(w: str, x: str, *, assume_cube_free: bool = False) -> CubeWitness | None:
    """Cube created by appending the letter x to the cube-free word w, if any.

    Only suffixes of w+x can be fresh cubes, so the check runs over suffix
    periods alone.  Pass assume_cube_free=True in search loops where the
    precondition is maintained inductively; by default the precondition is
    verified and its violation raises ValueError.
    """
    if len(x) != 1 or not "a" <= x <= "z":
        raise ValueError(f"appended letter must be a single letter, got {x!r}")
    if not assume_cube_free and find_cube(w) is not None:
        raise ValueError("append_check requires a cube-free base word")
    wx = w + x
    n = len(wx)
    for p in range(1, n // 3 + 1):
        if wx[n - 3 * p : n - 2 * p] == wx[n - 2 * p : n - p] == wx[n - p :]:
            return CubeWitness(n - 3 * p + 1, p)
    return None


def extension_is_cube_free(w: str, ext: str) -> bool:
    """True iff w + ext is cube-free, assuming w itself is cube-free."""
    cur = w
    for x in ext:
        if append_check(cur, x, assume_cube_free=True) is not None:
            return False
        cur += x
    return True


def max_periodic_suffix(w: str, p: int) -> PeriodicSuffix:
    """Maximal-length suffix of w having period p.

    A length <= p means the period holds only vacuously.
    """
    n = len(w)
    if not 1 <= p <= n:
        raise ValueError(f"period must be in 1..{n}, got {p}")
    i = n - p - 1
    while i >= 0 and w[i] == w[i + p]:
        i -= 1
    return PeriodicSuffix(p, n - i - 1)


def fine_wilf_period(p: int, q: int, length: int) -> int | None:
    """gcd(p, q) when a word of the given length with periods p and q must
    also have period gcd(p, q); None when the length is below the threshold
    p + q - gcd(p, q)."""
    if p < 1 or q < 1:
        raise ValueError("periods must be positive")
    g = math.gcd(p, q)
    return g if length >= p + q - g else None
