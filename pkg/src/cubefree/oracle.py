"""Brute-force reference implementations for cross-validation.

Everything here is deliberately naive and shares no scanning code with
the optimized paths: cube detection compares letters one by one, the
Thue-Morse letters come from the parity formula instead of the morphism,
and uniformity is decided by trying all decompositions.  The acceptance
suite leans on agreement between the two routes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from . import words
from .analysis import MARKERS
from .words import CubeWitness

CUBE_MINI = "mini"
CUBE_MIDI = "midi"
CUBE_MAXI = "maxi"
CUBE_UNIFORM = "uniform-cube"  # no marker even in x^3; outside the mini/midi/maxi trichotomy

_OVERLAP_NUMPY_THRESHOLD = 2048


def naive_is_cube_free(w: str) -> bool:
    """Check every start position and period by direct letter comparison."""
    n = len(w)
    for i in range(n):
        for p in range(1, (n - i) // 3 + 1):
            if all(w[i + k] == w[i + k + p] == w[i + k + 2 * p] for k in range(p)):
                return False
    return True


def tm_letter_by_parity(i: int) -> str:
    """T[i] from the population count of i-1 (independent of the morphism route)."""
    if i < 1:
        raise ValueError("positions into T start at 1")
    return "a" if bin(i - 1).count("1") % 2 == 0 else "b"


def tm_prefix_by_parity(n: int) -> str:
    return "".join(tm_letter_by_parity(i) for i in range(1, n + 1))


def _overlap_scan(w: str) -> bool:
    n = len(w)
    for i in range(n):
        for p in range(1, (n - i - 1) // 2 + 1):
            if all(w[i + k] == w[i + k + p] for k in range(p + 1)):
                return False
    return True


def _overlap_vectorised(w: str) -> bool:
    arr = np.frombuffer(w.encode("ascii"), dtype=np.uint8)
    n = arr.size
    for p in range(1, (n - 1) // 2 + 1):
        m = arr[p:] == arr[:-p]
        c = np.cumsum(m)
        carried = np.maximum.accumulate(np.where(m, 0, c))
        if int((c - carried).max(initial=0)) >= p + 1:
            return False
    return True


def is_overlap_free(w: str) -> bool:
    """No factor of the form c + x + c + x + c (a letter c, any x).

    Equivalently no factor of length 2p+1 with period p.  Short words are
    scanned letter by letter; long ones use a vectorised run-length scan.
    """
    for ch in w:
        if ch not in "ab":
            raise ValueError(f"binary word expected, got letter {ch!r}")
    if len(w) < _OVERLAP_NUMPY_THRESHOLD:
        return _overlap_scan(w)
    return _overlap_vectorised(w)


class EnumerationResult(NamedTuple):
    count: int
    words: list[str] | None


def enumerate_cube_free(d: int, n: int, *, collect: bool = False, cap: int = 10**6) -> EnumerationResult:
    """Exact count of cube-free words of length n over the d-letter alphabet.

    Depth-first extension pruned by the incremental suffix-cube check; the
    cap bounds the count (and the collected list) to desk scale.
    """
    alphabet = words.letters_of(d)
    if n < 0:
        raise ValueError("length must be non-negative")
    count = 0
    out: list[str] | None = [] if collect else None
    def rec(w: str) -> None:
        nonlocal count
        if len(w) == n:
            count += 1
            if count > cap:
                raise ValueError(f"enumeration cap of {cap} words exceeded")
            if out is not None:
                out.append(w)
            return
        for x in alphabet:
            if words.append_check(w, x, assume_cube_free=True) is None:
                rec(w + x)
    rec("")
    return EnumerationResult(count, out)


def iter_cube_free(d: int, max_n: int) -> Iterator[str]:
    """All cube-free words of length 1..max_n over d letters, in tree order."""
    alphabet = words.letters_of(d)
    def rec(w: str) -> Iterator[str]:
        if w:
            yield w
        if len(w) == max_n:
            return
        for x in alphabet:
            if words.append_check(w, x, assume_cube_free=True) is None:
                yield from rec(w + x)
    yield from rec("")


def brute_count_cube_free(d: int, n: int) -> int:
    """Order-independent recount: filter all d^n words by the naive checker."""
    alphabet = words.letters_of(d)
    if n == 0:
        return 1
    total = 0
    def rec(w: str) -> None:
        nonlocal total
        if len(w) == n:
            if naive_is_cube_free(w):
                total += 1
            return
        for x in alphabet:
            rec(w + x)
    rec("")
    return total


@dataclass
class ContextTreeReport:
    """What a walk of the right-context tree of a word saw.

    alive_at_depth counts the explored cube-free contexts per length; the
    counts are complete when the walk exhausted the tree (or ran in full
    mode), partial when a survival probe exited early.
    """

    root: str
    depth: int
    exhausted: bool
    max_depth: int
    alive_at_depth: dict[int, int]
    complete: bool
    words_at_depth: dict[int, list[str]] | None = None


def context_tree(u: str, depth: int, *, d: int | None = None, full: bool = False) -> ContextTreeReport:
    """Explore right contexts of u up to the given length.

    exhausted is True iff no context of that length exists.  The default
    probe mode stops at the first surviving branch (the tree of a word with
    infinitely many contexts is far too big to walk whole); full mode walks
    every node and additionally records the context words per depth.
    """
    d = words.validate_word(u, d)
    if words.find_cube(u) is not None:
        raise ValueError("context_tree requires a cube-free root")
    alphabet = words.letters_of(d)
    counts: Counter[int] = Counter({0: 1})
    if full:
        level = [""]
        per_depth = {0: [""]}
        k = 0
        while level and k < depth:
            nxt = []
            for ctx in level:
                for x in alphabet:
                    if words.append_check(u + ctx, x, assume_cube_free=True) is None:
                        nxt.append(ctx + x)
            k += 1
            level = nxt
            counts[k] = len(level)
            per_depth[k] = level
        alive = {i: c for i, c in counts.items() if c}
        exhausted = not level
        max_depth = max(alive) if alive else 0
        return ContextTreeReport(u, depth, exhausted, max_depth, alive, True, per_depth)

    deepest = 0
    def probe(ctx: str) -> bool:
        nonlocal deepest
        k = len(ctx)
        deepest = max(deepest, k)
        if k == depth:
            return True
        for x in alphabet:
            if words.append_check(u + ctx, x, assume_cube_free=True) is None:
                counts[k + 1] += 1
                if probe(ctx + x):
                    return True
        return False
    survived = probe("")
    exhausted = not survived
    return ContextTreeReport(
        u, depth, exhausted, depth if survived else deepest, dict(counts), exhausted
    )


def survives_to(u: str, depth: int, d: int | None = None) -> bool:
    """True iff u has a cube-free right context of the given length."""
    return not context_tree(u, depth, d=d).exhausted


def theta_decompose(w: str) -> tuple[str, str, str] | None:
    """A decomposition w = c + theta(u) + d witnessing uniformity, or None."""
    for ch in w:
        if ch not in "ab":
            raise ValueError(f"binary word expected, got letter {ch!r}")
    n = len(w)
    for lc, ld in ((0, 0), (1, 0), (0, 1), (1, 1)):
        if lc + ld > n or (n - lc - ld) % 2:
            continue
        mid = w[lc : n - ld]
        blocks = [mid[k : k + 2] for k in range(0, len(mid), 2)]
        if all(b in ("ab", "ba") for b in blocks):
            u = "".join("a" if b == "ab" else "b" for b in blocks)
            return (w[:lc], u, w[n - ld :])
    return None


def classify_cube(containing: str, witness: CubeWitness) -> str:
    """Marker-based class of a cube occurrence: where do markers first appear?

    mini: only x^3 contains a marker; midi: x^2 does but x does not;
    maxi: the root x itself does.  Cubes with no marker anywhere in x^3
    fall outside that trichotomy and are reported as a fourth diagnostic
    class.
    """
    pos, p = witness
    x = containing[pos - 1 : pos - 1 + p]
    if not x or containing[pos - 1 : pos - 1 + 3 * p] != x * 3:
        raise ValueError("witness does not locate a cube in the word")
    for ch in x:
        if ch not in "ab":
            raise ValueError("cube classification is defined for binary words")
    def has_marker(s: str) -> bool:
        return any(m in s for m in MARKERS)
    if has_marker(x):
        return CUBE_MAXI
    if has_marker(x * 2):
        return CUBE_MIDI
    if has_marker(x * 3):
        return CUBE_MINI
    return CUBE_UNIFORM


def _suffix_has_period(s: str, length: int, p: int) -> bool:
    start = len(s) - length
    return all(s[i] == s[i + p] for i in range(start, len(s) - p))


def qualifying_periods(s: str) -> set[int]:
    """Periods p >= 2 whose (3p-2)-suffix of s is genuinely p-periodic."""
    return {
        p
        for p in range(2, (len(s) + 2) // 3 + 1)
        if _suffix_has_period(s, 3 * p - 2, p)
    }


def greedy_chain_search(max_n: int) -> list[tuple[str, str, int]]:
    """For every binary cube-free word up to max_n, greedily grow a right
    context whose every step leaves a (3p-2)-length p-periodic suffix with
    consecutive periods distinct; record the word, the context, and its
    length.  Deterministic: letters are tried in order a, b."""
    if not 1 <= max_n <= 20:
        raise ValueError("desk-scale cap: max_n must be in 1..20")
    results = []
    for u in iter_cube_free(2, max_n):
        ctx = ""
        reachable: set[int] | None = None
        while True:
            for x in "ab":
                cand = u + ctx + x
                if not naive_is_cube_free(cand):
                    continue
                periods = qualifying_periods(cand)
                if reachable is None:
                    nxt = periods
                else:
                    nxt = {p for p in periods if len(reachable) > 1 or p not in reachable}
                if nxt:
                    ctx += x
                    reachable = nxt
                    break
            else:
                break
        results.append((u, ctx, len(ctx)))
    return results
