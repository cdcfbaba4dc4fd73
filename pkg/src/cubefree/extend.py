"""Explicit infinite cube-free extensions and the extendability decision.

The central object is the tail certificate (Y, r): finite data denoting
the infinite word u + Y + T[r..], where T is the Thue-Morse word.  A
certificate is checked by a finite computation that is provably enough:
a cube in u + Y + T[r..] cannot live inside the pure T-tail (T is
cube-free), and one that touches the finite prefix P = u + Y has period
at most |P| + 1, since a longer period would place a (2p+1)-length
p-periodic factor -- an overlap -- inside T.  Such a cube ends within
4|P| letters, so checking the prefix of length |P| + L with
L = 4(|P|+1) + 64 settles the infinite claim.

Extendability is decided by a two-sided search: breadth-first exploration
of the right-context tree (a finite tree means a definite "no"), with a
certificate attempt at every explored node (a verified certificate means
a definite "yes").  Either side terminates on every input at desk scale:
a right-extendable word always has a finite extension carrying a long
uniform right context from which a tail certificate is built, and a
non-extendable word has a finite tree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import analysis, thue_morse, words

_BAD_PREFIXES = ("ababa", "babab")


class NotExtendableError(ValueError):
    """Raised when an operation requires an extendable word but the search
    proved the context tree finite."""

    def __init__(self, word: str, max_context_length: int):
        super().__init__(
            f"{word!r} is not right extendable: context tree exhausted, "
            f"maximal context length {max_context_length}"
        )
        self.word = word
        self.max_context_length = max_context_length


def verification_length(prefix_len: int) -> int:
    """Tail length whose cube-freeness certifies the whole infinite word."""
    return 4 * (prefix_len + 1) + 64


@dataclass(frozen=True)
class TailCertificate:
    """Certificate that u + Y + T[r..] is an infinite cube-free word.

    seam marks where the uniform stretch feeding the T-tail begins inside
    u + Y (the structural residue of the construction); tm_aligned records
    the stronger claim that the whole of u + Y equals T[r-|uY| .. r-1], so
    the certified word is simply a tail of T.
    """

    Y: str
    r: int
    seam: int = 0
    tm_aligned: bool = False

    def verified_prefix(self, u: str) -> int:
        return verification_length(len(u) + len(self.Y))

    def verify(self, u: str) -> bool:
        """Re-check the certificate against the word it extends."""
        if self.r < 1:
            return False
        prefix = u + self.Y
        length = self.verified_prefix(u)
        full = prefix + thue_morse.tm_range(self.r, self.r + length)
        if not words.is_cube_free(full):
            return False
        if not 0 <= self.seam <= len(prefix):
            return False
        tail_feed = prefix[self.seam :]
        try:
            if not analysis.is_uniform(tail_feed):
                return False
        except ValueError:  # c-letters at the seam never certify
            return False
        if self.tm_aligned:
            if self.r - len(prefix) < 1:
                return False
            if prefix and thue_morse.tm_range(self.r - len(prefix), self.r - 1) != prefix:
                return False
        return True

    def _checked(self, u: str) -> "TailCertificate":
        if not self.verify(u):
            raise RuntimeError(
                f"internal error: constructed certificate (Y={self.Y!r}, r={self.r}) "
                f"fails verification for {u!r}"
            )
        return self


@dataclass(frozen=True)
class ExtendabilityVerdict:
    """Yes with a verified certificate, or No with the exhaustion depth."""

    extendable: bool
    certificate: TailCertificate | None = None
    max_context_length: int | None = None
    heuristic: bool = False


# Decision results and failed certificate probes, keyed by (word, alphabet
# size).  Concurrent duplicate inserts are harmless: values for equal keys
# are equal, and all operations stay logically pure.
_verdicts: dict[tuple[str, int], ExtendabilityVerdict] = {}
_no_uniform_context: set[str] = set()
_no_binary_reduction: set[tuple[str, int]] = set()


def clear_caches() -> None:
    _verdicts.clear()
    _no_uniform_context.clear()
    _no_binary_reduction.clear()


def log_bound(n: int) -> float:
    """Upper bound max(1, 8.13*log2(n) - 15.64) on the length of a period
    chain over a word of length n (see chain_length_audit)."""
    if n < 1:
        raise ValueError("length must be positive")
    return max(1.0, 8.13 * math.log2(n) - 15.64)


def chain_length_audit(u: str, w: str) -> int:
    """Largest k such that every step i = 1..k of appending w to u leaves a
    suffix of length 3p-2 with period p for some p >= 2, with consecutive
    periods distinct.

    Recomputed from scratch at every prefix (no incremental state), so it
    independently checks any chain a search produced.
    """
    words.validate_word(u + w)
    if words.find_cube(u) is not None:
        raise ValueError("chain audit requires a cube-free base word")
    if not words.is_cube_free(u + w):
        raise ValueError("w must be a right context of u")
    reachable: set[int] | None = None
    k = 0
    for i in range(1, len(w) + 1):
        s = u + w[:i]
        periods = {
            p
            for p in range(2, (len(s) + 2) // 3 + 1)
            if words.max_periodic_suffix(s, p).length >= 3 * p - 2
        }
        if reachable is not None:
            periods = {p for p in periods if len(reachable) > 1 or p not in reachable}
        if not periods:
            break
        reachable = periods
        k = i
    return k


def _has_cf_context(u: str, k: int) -> bool:
    """Does u have any cube-free binary right context of length k?"""
    if k == 0:
        return True
    for x in "ab":
        if words.append_check(u, x, assume_cube_free=True) is None:
            if _has_cf_context(u + x, k - 1):
                return True
    return False


def _tail_starts(tail: str, *, prefer_tm: bool) -> list[int]:
    """Candidate T-positions r making tail + T[r..] cube-free.

    A tail that occurs in T continues it in place (the certified word then
    rides a genuine suffix of T); otherwise the choice is driven by the
    last two-letter block of the right-aligned tail, testing the short
    probes that decide between the two viable splice points of T.
    """
    cands: list[int] = []
    if prefer_tm and thue_morse.is_tm_factor(tail):
        i = thue_morse.find_occurrence_after(tail, 1)
        cands.append(i + len(tail))
    if len(tail) >= 2 and tail[-2:] in ("ab", "ba"):
        if tail[-2:] == "ab":
            probes = (("aa", 6), ("babb", 20))
        else:
            # letter-exchanged case: T[22..] and T[4..] open with the
            # complements of what T[6..] and T[20..] open with
            probes = (("bb", 22), ("abaa", 4))
        for probe, r in probes:
            if words.extension_is_cube_free(tail, probe):
                cands.append(r)
    return cands


def t_extend_uniform(u: str) -> TailCertificate:
    """Tail certificate for a uniform cube-free word with a short context.

    Requires a cube-free right context of length 3, or length 2 when u is
    right aligned.  Prefixes of T continue T in place.  Otherwise the
    construction works block-wise: a right-aligned word tests the two
    probes of its last block to choose between the tails starting at
    T-positions 6 and 20; a word one letter past alignment either absorbs
    that letter into the tail (positions 7 / 21) or, when the letter heads
    the wrong way, extends by one letter back to alignment first.
    """
    analysis._require_binary(u)
    if words.find_cube(u) is not None:
        raise ValueError("t_extend_uniform requires a cube-free word")
    if not analysis.is_uniform(u):
        raise ValueError(f"{u!r} is not uniform")
    right_aligned = analysis.is_right_aligned(u)
    if not _has_cf_context(u, 3) and not (right_aligned and _has_cf_context(u, 2)):
        raise ValueError(f"{u!r} has no qualifying short right context")

    n = len(u)
    if thue_morse.tm_prefix(n) == u:
        return TailCertificate("", n + 1, 0, tm_aligned=True)._checked(u)

    if right_aligned and n >= 2:
        for r in _tail_starts(u, prefer_tm=False):
            cert = TailCertificate("", r, 0)
            if cert.verify(u):
                return cert
        raise RuntimeError(f"no tail start verified for right-aligned {u!r}")

    if n >= 3 and analysis.is_right_aligned(u[:-1]):
        last = u[-1]
        block = u[-3:-1]  # last complete block of the aligned core u[:-1]
        if last == "a" and block == "ab":
            # the trailing letter is absorbed by the tail: a + T[7..] = T[6..]
            return TailCertificate("", 7, 0)._checked(u)
        if last == "b" and block == "ba":
            # mirror absorption: b + T[23..] = T[22..]
            return TailCertificate("", 23, 0)._checked(u)
        # the trailing letter breaks alignment the wrong way: one more
        # letter restores alignment (the alternative letter cubes out)
        step = "b" if last == "a" else "a"
        if not words.extension_is_cube_free(u, step):
            raise RuntimeError(f"alignment step letter {step!r} is blocked for {u!r}")
        for r in _tail_starts(u + step, prefer_tm=False):
            cert = TailCertificate(step, r, 0)
            if cert.verify(u):
                return cert
        raise RuntimeError(f"no tail start verified for offset word {u!r}")

    # tiny leftovers ("b", "aa", "bb"): every short uniform cube-free word
    # occurs in T, so continue T from its first occurrence
    i = thue_morse.find_occurrence_after(u, 1)
    return TailCertificate("", i + n, 0, tm_aligned=True)._checked(u)


class _ConstructionMiss(Exception):
    pass


def _attach_tail(u: str, consumed: str, remainder: str) -> TailCertificate:
    s = u + consumed
    if analysis.is_uniform(s):
        try:
            sub = t_extend_uniform(s)
        except ValueError as exc:
            raise _ConstructionMiss(str(exc))
        return TailCertificate(consumed + sub.Y, sub.r, sub.seam, sub.tm_aligned)._checked(u)
    marks = analysis.scan_markers(s)
    if not marks:
        raise _ConstructionMiss("non-uniform word without markers")
    z = marks[-1]
    if z.position > len(u):
        raise _ConstructionMiss("rightmost marker does not begin in the stem")
    split = z.position  # the new stem ends with the marker's first letter
    tail = s[split:]
    if not analysis.is_right_aligned(tail) or len(tail) < 2 * split:
        raise _ConstructionMiss("re-split tail is not a long right-aligned context")
    for r in _tail_starts(tail, prefer_tm=True):
        cert = TailCertificate(consumed, r, split)
        if cert.verify(u):
            return cert
    raise _ConstructionMiss("no tail start verified at the marker re-split")


def t_extend_with_uniform_context(u: str, w: str) -> TailCertificate:
    """Tail certificate for a cube-free word with a long uniform context.

    Requires u + w cube-free, w uniform of length at least 2|u| + 3, and w
    free of the prefixes ababa/babab.  Only a right-aligned prefix of w of
    length 2|u| or 2|u|+1 is consumed; the rest of w witnesses the needed
    context lengths.  If the consumed prefix keeps u + prefix uniform the
    short-context construction applies directly; otherwise the word is
    re-split at its rightmost marker, whose trailing part is a long
    right-aligned word that a T-tail continues.
    """
    analysis._require_binary(u + w)
    if not words.is_cube_free(u + w):
        raise ValueError("w must be a right context of u")
    if not analysis.is_uniform(w):
        raise ValueError("w must be uniform")
    if len(w) < 2 * len(u) + 3:
        raise ValueError(f"context too short: need length >= {2 * len(u) + 3}")
    if w[:5] in _BAD_PREFIXES:
        raise ValueError("context must not begin with ababa or babab")

    candidates = [k for k in (2 * len(u), 2 * len(u) + 1) if analysis.is_right_aligned(w[:k])]
    assert candidates, "a uniform word has a right-aligned prefix at one of two lengths"
    misses = []
    for k in candidates:
        try:
            return _attach_tail(u, w[:k], w[k:])
        except _ConstructionMiss as miss:
            misses.append(str(miss))
    raise RuntimeError(f"tail attachment failed for {u!r} with context {w!r}: {misses}")


def _find_uniform_context(
    s: str, qlen: int, *, require_extendable: bool, d_check: int = 2
) -> str | None:
    """Lexicographically first uniform cube-free right context of s with
    exactly the given length and no forbidden prefix; optionally only one
    that keeps the extended word right extendable."""

    def rec(q: str, parity: int | None) -> str | None:
        if len(q) == qlen:
            if require_extendable and not is_right_extendable(s + q, d_check).extendable:
                return None
            return q
        for x in "ab":
            new_parity = parity
            if q and q[-1] == x:
                par = len(q) % 2
                if parity is not None and parity != par:
                    continue
                new_parity = par
            if len(q) == 4 and q + x in _BAD_PREFIXES:
                continue
            if words.append_check(s + q, x, assume_cube_free=True) is not None:
                continue
            hit = rec(q + x, new_parity)
            if hit is not None:
                return hit
        return None

    return rec("", None)


def _binary_suffix(s: str) -> str:
    """The maximal all-binary suffix (everything after the last c-letter)."""
    for i in range(len(s) - 1, -1, -1):
        if words.is_c_letter(s[i]):
            return s[i + 1 :]
    return s


def _search_lifting_context(s: str, s2: str, need: int) -> tuple[str, ExtendabilityVerdict] | None:
    """Binary context w of s, |w| = need, with s2 + w right extendable over
    {a,b}.  Any binary context of s2 + w is then a context of s + w: a cube
    reaching past the last c-letter of s would need a period both larger
    than |s2 + w| and smaller than half the c-letter's position."""

    def rec(w: str) -> tuple[str, ExtendabilityVerdict] | None:
        if len(w) == need:
            sub = is_right_extendable(s2 + w, 2)
            if sub.extendable:
                return w, sub
            return None
        for x in "ab":
            if words.append_check(s + w, x, assume_cube_free=True) is None:
                hit = rec(w + x)
                if hit is not None:
                    return hit
        return None

    return rec("")


def _node_certificate(s: str, d: int) -> TailCertificate | None:
    """Try to certify the word s directly (the per-node check of the search)."""
    if d == 2:
        if s in _no_uniform_context:
            return None
        q = _find_uniform_context(s, 2 * len(s) + 3, require_extendable=False)
        if q is None:
            _no_uniform_context.add(s)
            return None
        return t_extend_with_uniform_context(s, q)
    if (s, d) in _no_binary_reduction:
        return None
    s2 = _binary_suffix(s)
    target = (len(s) + 1) // 2
    need = max(0, target - len(s2))
    hit = _search_lifting_context(s, s2, need)
    if hit is None:
        _no_binary_reduction.add((s, d))
        return None
    w, sub = hit
    cert2 = sub.certificate
    assert cert2 is not None
    seam = len(s) - len(s2) + cert2.seam
    return TailCertificate(w + cert2.Y, cert2.r, seam, tm_aligned=False)._checked(s)


def _bounded_context_probe(u: str, d: int, bound: int) -> ExtendabilityVerdict:
    """Fast heuristic decision: any context of the given length counts as a
    yes (no certificate); exhaustion below it is still an exact no."""
    alphabet = words.letters_of(d)
    deepest = 0

    def probe(s: str, depth: int) -> bool:
        nonlocal deepest
        deepest = max(deepest, depth)
        if depth == bound:
            return True
        return any(
            words.append_check(s, x, assume_cube_free=True) is None and probe(s + x, depth + 1)
            for x in alphabet
        )

    if probe(u, 0):
        return ExtendabilityVerdict(True, None, None, heuristic=True)
    return ExtendabilityVerdict(False, None, deepest)


def is_right_extendable(
    u: str, d: int | None = None, *, assume_context_bound: int | None = None
) -> ExtendabilityVerdict:
    """Decide whether u has an infinite cube-free right context.

    Breadth-first walk of the right-context tree, attempting a certificate
    at every node; lexicographic child order keeps verdicts, certificates,
    and exhaustion depths reproducible.  Yes-verdicts carry a verified
    TailCertificate; No-verdicts report the maximal context length of the
    exhausted tree.  Verdicts are memoized per (word, alphabet size).

    assume_context_bound switches on a heuristic shortcut: reaching any
    context of that length counts as a yes without a certificate.  Only
    non-heuristic verdicts are cached.
    """
    d = words.validate_word(u, d)
    if words.find_cube(u) is not None:
        raise ValueError(f"{u!r} contains a cube")
    if assume_context_bound is not None:
        return _bounded_context_probe(u, d, assume_context_bound)
    key = (u, d)
    cached = _verdicts.get(key)
    if cached is not None:
        return cached
    alphabet = words.letters_of(d)

    level = [u]
    depth = 0
    deepest = 0
    while level:
        deepest = max(deepest, depth)
        nxt: list[str] = []
        for s in level:
            hit = _verdicts.get((s, d))
            if hit is not None:
                if hit.extendable:
                    assert hit.certificate is not None
                    cert = TailCertificate(
                        s[len(u) :] + hit.certificate.Y,
                        hit.certificate.r,
                        hit.certificate.seam,
                        hit.certificate.tm_aligned,
                    )
                    verdict = ExtendabilityVerdict(True, cert)
                    _verdicts[key] = verdict
                    return verdict
                if hit.max_context_length is not None:
                    deepest = max(deepest, depth + hit.max_context_length)
                continue  # known-dead subtree
            cert = _node_certificate(s, d)
            if cert is not None:
                _verdicts[(s, d)] = ExtendabilityVerdict(True, cert)
                full = TailCertificate(s[len(u) :] + cert.Y, cert.r, cert.seam, cert.tm_aligned)
                verdict = ExtendabilityVerdict(True, full)
                _verdicts[key] = verdict
                return verdict
            for x in alphabet:
                if words.append_check(s, x, assume_cube_free=True) is None:
                    nxt.append(s + x)
        level = nxt
        depth += 1
    verdict = ExtendabilityVerdict(False, None, deepest)
    _verdicts[key] = verdict
    return verdict


def is_left_extendable(
    u: str, d: int | None = None, *, assume_context_bound: int | None = None
) -> ExtendabilityVerdict:
    """Extendability to the left: the mirror decision on the reversed word.

    Cube-freeness is reversal-invariant, so the verdict is exact; a Yes
    certificate describes the reversed word growing rightward, i.e. the
    original word extended leftward by the reversal of that growth.
    """
    return is_right_extendable(words.reverse(u), d, assume_context_bound=assume_context_bound)


def _require_extendable(u: str, d: int) -> ExtendabilityVerdict:
    verdict = is_right_extendable(u, d)
    if not verdict.extendable:
        raise NotExtendableError(u, verdict.max_context_length or 0)
    return verdict


def shortest_c_extension(U: str, d: int) -> str:
    """Shortest right context of the form (binary word + c-letter) whose
    append keeps U right extendable; breadth-first and lexicographic, so
    deterministic.  Raises if none exists within half of |U| plus slack."""
    alphabet = words.letters_of(d)
    c_letters = alphabet[2:]
    cap = (len(U) + 1) // 2 + 2
    level = [""]
    length = 0
    while level and length <= cap:
        for v in level:
            for c in c_letters:
                if words.append_check(U + v, c, assume_cube_free=True) is not None:
                    continue
                if is_right_extendable(U + v + c, d).extendable:
                    return v + c
        nxt = []
        for v in level:
            for x in "ab":
                if words.append_check(U + v, x, assume_cube_free=True) is None:
                    nxt.append(v + x)
        level = nxt
        length += 1
    raise RuntimeError(f"no extendability-preserving c-letter context found for {U!r}")


def _shortest_marker_extension(base: str) -> str:
    """Shortest nonempty binary context v with base + v ending at a marker
    and still right extendable over {a,b}."""
    cap = 2 * len(base) + 30
    level = [""]
    length = 0
    while level and length <= cap:
        nxt = []
        for v in level:
            for x in "ab":
                if words.append_check(base + v, x, assume_cube_free=True) is not None:
                    continue
                cand = v + x
                word = base + cand
                if any(word.endswith(m) for m in analysis.MARKERS):
                    if is_right_extendable(word, 2).extendable:
                        return cand
                nxt.append(cand)
        level = nxt
        length += 1
    raise RuntimeError(f"no extendability-preserving marker context found for {base!r}")


def algorithm2(u: str, d: int | None = None, *, stats: dict | None = None) -> TailCertificate:
    """Construct an explicit infinite right context (Y, r) of an extendable
    cube-free word, denoting u + Y + T[r..].

    Stage one (alphabets beyond {a,b} only): grow u by shortest contexts
    ending in c-letters until the last c-letter is followed by a binary
    stretch of half the word's length that is itself right extendable over
    {a,b}; binary contexts of that stretch then lift to the whole word.
    Stage two: grow the binary stretch by shortest contexts ending at
    markers until it has a uniform right context of length 2n+3 with no
    ababa/babab prefix that preserves extendability.  The final tail start
    comes from the uniform-context construction.
    """
    d = words.validate_word(u, d)
    if words.find_cube(u) is not None:
        raise ValueError(f"{u!r} contains a cube")
    _require_extendable(u, d)
    if stats is not None:
        stats.setdefault("stage1_iterations", 0)
        stats.setdefault("stage2_iterations", 0)

    iteration_cap = max(8, int(log_bound(max(1, len(u)))) + 4)
    pieces: list[str] = []
    U = u
    anchor = u  # the binary word whose contexts lift to the full prefix

    run_stage1 = d >= 3 and (
        any(words.is_c_letter(ch) for ch in u) or not is_right_extendable(u, 2).extendable
    )
    if run_stage1:
        for _ in range(iteration_cap):
            if stats is not None:
                stats["stage1_iterations"] += 1
            s2 = _binary_suffix(U)
            need = max(0, (len(U) + 1) // 2 - len(s2))
            hit = _search_lifting_context(U, s2, need)
            if hit is not None:
                w, _ = hit
                pieces.append(w)
                anchor = s2 + w
                break
            vc = shortest_c_extension(U, d)
            pieces.append(vc)
            U += vc
        else:
            raise RuntimeError(f"stage-one iteration cap exceeded for {u!r}")

    for _ in range(iteration_cap):
        if stats is not None:
            stats["stage2_iterations"] += 1
        q = _find_uniform_context(anchor, 2 * len(anchor) + 3, require_extendable=True)
        if q is not None:
            break
        v = _shortest_marker_extension(anchor)
        pieces.append(v)
        anchor += v
    else:
        raise RuntimeError(f"stage-two iteration cap exceeded for {u!r}")

    sub = t_extend_with_uniform_context(anchor, q)
    pieces.append(sub.Y)
    Y = "".join(pieces)
    seam = len(u) + len(Y) - len(anchor) - len(sub.Y) + sub.seam
    aligned = sub.tm_aligned and u + Y == anchor + sub.Y
    return TailCertificate(Y, sub.r, seam, aligned)._checked(u)
