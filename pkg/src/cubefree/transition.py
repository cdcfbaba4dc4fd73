"""Transition words: deciding and constructing w with u + w + v cube-free.

The decision follows a short-circuit order: look for a right context of u
carrying v as a suffix (a direct witness), dually for left contexts of v,
and otherwise settle both endpoints' extendability.  A non-extendable
endpoint has a finite context tree, which decides the question exactly;
two extendable endpoints always admit a transition, built explicitly by
splicing the two certified Thue-Morse tails inside T.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import extend, thue_morse, words


class TransitionMethod(Enum):
    DIRECT_CONTEXT = "direct-context"
    THEOREM = "theorem"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class TransitionResult:
    exists: bool
    witness: str | None
    method: TransitionMethod


def _validated_pair(u: str, v: str, d: int | None) -> int:
    if d is None:
        d = max(words.infer_alphabet(u), words.infer_alphabet(v))
    words.validate_word(u, d)
    words.validate_word(v, d)
    if words.find_cube(u) is not None:
        raise ValueError(f"{u!r} contains a cube")
    if words.find_cube(v) is not None:
        raise ValueError(f"{v!r} contains a cube")
    return d


def splice(u: str, u1: str, v: str, v1: str) -> str:
    """Transition from u to reverse(v) given Thue-Morse right contexts.

    u1 and v1 must be factors of T of lengths exactly 2|u| and 2|v| that
    extend u and v cube-freely.  The result w starts with u1 and ends with
    the reversal of v1; u + w + reverse(v) is cube-free (re-verified): a
    cube would have to cross an endpoint, forcing a period that both
    matches the endpoint and fits inside the overlap-free middle.
    """
    for word, ctx, name in ((u, u1, "u"), (v, v1, "v")):
        if len(ctx) != 2 * len(word):
            raise ValueError(f"context of {name} must have length {2 * len(word)}, got {len(ctx)}")
        if not thue_morse.is_tm_factor(ctx):
            raise ValueError(f"context of {name} is not a Thue-Morse factor")
        if not words.is_cube_free(word + ctx):
            raise ValueError(f"context of {name} is not a right context")
    w = thue_morse.splice_pattern(u1, words.reverse(v1))
    result = u + w + words.reverse(v)
    if not words.is_cube_free(result):
        raise RuntimeError(f"internal error: spliced word {w!r} fails for ({u!r}, {v!r})")
    return w


def _direct_right(u: str, v: str, d: int, cap: int) -> TransitionResult | None:
    """Bounded search of u's right-context tree for a context ending with v.

    Returns a decision when a witness appears or the whole tree fits under
    the cap (then absence of the suffix is a proof of impossibility);
    None when the tree is still alive at the cap without a witness.
    """
    alphabet = words.letters_of(d)
    level = [""]
    for _ in range(cap + 1):
        for ctx in level:
            if ctx.endswith(v):
                witness = ctx[: len(ctx) - len(v)]
                assert words.is_cube_free(u + witness + v)
                return TransitionResult(True, witness, TransitionMethod.DIRECT_CONTEXT)
        nxt = []
        for ctx in level:
            base = u + ctx
            for x in alphabet:
                if words.append_check(base, x, assume_cube_free=True) is None:
                    nxt.append(ctx + x)
        if not nxt:
            return TransitionResult(False, None, TransitionMethod.EXHAUSTED)
        level = nxt
    return None


def _direct_left(u: str, v: str, d: int, cap: int) -> TransitionResult | None:
    """Dual bounded search: left contexts of v beginning with u."""
    ru, rv = words.reverse(u), words.reverse(v)
    mirrored = _direct_right(rv, ru, d, cap)
    if mirrored is None or not mirrored.exists:
        return mirrored
    assert mirrored.witness is not None
    witness = words.reverse(mirrored.witness)
    assert words.is_cube_free(u + witness + v)
    return TransitionResult(True, witness, TransitionMethod.DIRECT_CONTEXT)


def transition_exists(
    u: str, v: str, d: int | None = None, *, direct_cap: int | None = None
) -> TransitionResult:
    """Decide whether some w makes u + w + v cube-free; always materialize w.

    Bounded direct searches first (they also settle the question exactly
    whenever a context tree turns out finite), then the certified
    extendability decisions: if u cannot grow right or v cannot grow left,
    the corresponding finite tree is scanned in full; if both can, a
    witness is constructed through the Thue-Morse word.

    direct_cap overrides the depth budget of the direct searches (default:
    the sought word's length plus a little slack).
    """
    d = _validated_pair(u, v, d)
    res = _direct_right(u, v, d, cap=direct_cap if direct_cap is not None else len(v) + 4)
    if res is not None:
        return res
    res = _direct_left(u, v, d, cap=direct_cap if direct_cap is not None else len(u) + 4)
    if res is not None:
        return res
    if not extend.is_right_extendable(u, d).extendable:
        final = _direct_right(u, v, d, cap=10**9)  # finite tree: runs to exhaustion
        assert final is not None
        return final
    if not extend.is_left_extendable(v, d).extendable:
        final = _direct_left(u, v, d, cap=10**9)
        assert final is not None
        return final
    witness = construct_transition(u, v, d)
    return TransitionResult(True, witness, TransitionMethod.THEOREM)


def construct_transition(u: str, v: str, d: int | None = None) -> str:
    """Explicit transition word for a right-extendable u and left-extendable v.

    Both endpoints receive explicit infinite extensions (Y, r); prefixes of
    the two T-tails of twice the padded endpoints' lengths are spliced
    inside T, giving Y1 + T-run + middle + reversed-T-run + Y2.  Raises
    NotExtendableError (with the exhaustion evidence) if an endpoint fails.
    """
    d = _validated_pair(u, v, d)
    if d >= 3:
        return transition_dary(u, v, d)
    c1 = extend.algorithm2(u, 2)
    c2 = extend.algorithm2(words.reverse(v), 2)
    p_len = len(u) + len(c1.Y)
    q_len = len(v) + len(c2.Y)
    u1 = thue_morse.tm_range(c1.r, c1.r + 2 * p_len - 1) if p_len else ""
    v1 = thue_morse.tm_range(c2.r, c2.r + 2 * q_len - 1) if q_len else ""
    mid = thue_morse.splice_pattern(u1, words.reverse(v1))
    w = c1.Y + mid + words.reverse(c2.Y)
    if not words.is_cube_free(u + w + v):
        raise RuntimeError(f"internal error: constructed transition fails for ({u!r}, {v!r})")
    return w


def _right_anchor(s: str, d: int) -> tuple[str, str]:
    """Grow s by a context x ending with a c-letter, followed by a binary
    stretch u1 of half the extended length that is right extendable over
    {a,b}; binary continuations of u1 then lift across the c-letter.

    When every natural context stays binary, a c-letter is forced into one
    by overwriting a position of a concrete certified context, re-checking
    extendability (preferred position: just past the current word, falling
    back to neighbours)."""
    U = s
    appended = ""
    guard = max(8, int(extend.log_bound(max(1, len(s)))) + 4)
    for _ in range(guard):
        anchored = any(words.is_c_letter(ch) for ch in appended)
        s2 = extend._binary_suffix(U)
        need = max(0, (len(U) + 1) // 2 - len(s2))
        hit = extend._search_lifting_context(U, s2, need)
        if hit is not None and anchored:
            w, _ = hit
            return appended, w
        if hit is not None:
            # the natural context is purely binary: force a c-letter into it
            forced = _force_c_context(U, d)
            appended += forced
            U += forced
            continue
        vc = extend.shortest_c_extension(U, d)
        appended += vc
        U += vc
    raise RuntimeError(f"anchor search iteration cap exceeded for {s!r}")


def _force_c_context(U: str, d: int) -> str:
    """A right context of U ending with the first c-letter, preserving
    extendability, obtained by overwriting one position of a certified
    context sample."""
    verdict = extend.is_right_extendable(U, d)
    if not verdict.extendable:
        raise extend.NotExtendableError(U, verdict.max_context_length or 0)
    cert = verdict.certificate
    assert cert is not None
    sample = cert.Y + thue_morse.tm_range(cert.r, cert.r + len(U) + 8)
    preferred = max(1, min(len(U), len(sample)))
    positions = list(range(preferred, len(sample) + 1)) + list(range(preferred - 1, 0, -1))
    for k in positions:
        cand = sample[: k - 1] + "c"
        if not words.extension_is_cube_free(U, cand):
            continue
        if extend.is_right_extendable(U + cand, d).extendable:
            return cand
    raise RuntimeError(f"could not force a c-letter into a context of {U!r}")


def transition_dary(u: str, v: str, d: int | None = None) -> str:
    """Transition word over an alphabet with c-letters.

    Both endpoints are anchored through contexts ending (starting) with a
    c-letter plus long binary stretches; a binary transition joins the two
    stretches.  Cubes in the assembled word would have to cover one of the
    anchoring c-letters, which the stretch lengths rule out.
    """
    d = _validated_pair(u, v, d)
    if d < 3:
        raise ValueError("transition_dary requires an alphabet with c-letters")
    x, u1 = _right_anchor(u, d)
    y_rev, v1_rev = _right_anchor(words.reverse(v), d)
    y = words.reverse(y_rev)
    v1 = words.reverse(v1_rev)
    w1 = construct_transition(u1, v1, 2)
    w = x + u1 + w1 + v1 + y
    if not words.is_cube_free(u + w + v):
        raise RuntimeError(f"internal error: d-ary transition fails for ({u!r}, {v!r})")
    return w
