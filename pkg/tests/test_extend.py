import math

import pytest

from cubefree import analysis, extend, oracle, thue_morse, words
from cubefree.extend import (
    NotExtendableError,
    TailCertificate,
    algorithm2,
    chain_length_audit,
    is_left_extendable,
    is_right_extendable,
    log_bound,
    t_extend_uniform,
    t_extend_with_uniform_context,
)

# discovered by exhaustive search; both one-letter extensions end with cubes
SHORTEST_DEAD = "aabaabaa"


def _has_ctx(u, k):
    if k == 0:
        return True
    return any(
        words.append_check(u, x, assume_cube_free=True) is None and _has_ctx(u + x, k - 1)
        for x in "ab"
    )


def test_log_bound_values():
    assert math.isclose(log_bound(1024), 8.13 * 10 - 15.64)
    assert log_bound(2) == 1.0
    assert math.isclose(log_bound(512), 8.13 * 9 - 15.64)
    with pytest.raises(ValueError):
        log_bound(0)


def test_t_extend_uniform_examples():
    cert = t_extend_uniform("abbabaab")
    assert (cert.Y, cert.r) == ("", 9)
    assert cert.verify("abbabaab")

    cert = t_extend_uniform("abab")
    assert (cert.Y, cert.r) == ("", 6)
    tail = thue_morse.tm_range(6, 6 + 4 * 4)
    assert oracle.naive_is_cube_free("abab" + tail)

    with pytest.raises(ValueError):
        t_extend_uniform("aabaa")


def test_t_extend_uniform_coverage():
    # every uniform cube-free word with the required short context certifies
    n_cases = 0
    for u in oracle.iter_cube_free(2, 12):
        if not analysis.is_uniform(u):
            continue
        if not (_has_ctx(u, 3) or (analysis.is_right_aligned(u) and _has_ctx(u, 2))):
            continue
        cert = t_extend_uniform(u)
        assert cert.verify(u), u
        n_cases += 1
    assert n_cases > 200


def test_t_extend_uniform_tiny_words():
    for u in ("", "a", "b", "aa", "bb", "ab", "ba"):
        cert = t_extend_uniform(u)
        assert cert.verify(u), u


def test_t_extend_with_uniform_context_examples():
    cert = t_extend_with_uniform_context("", "abbabaa")
    assert cert.verify("")

    cert = t_extend_with_uniform_context("b", "abbab")
    assert cert.verify("b")

    with pytest.raises(ValueError):
        t_extend_with_uniform_context("a", "ababaab")
    with pytest.raises(ValueError):
        t_extend_with_uniform_context("ab", "abba")  # too short
    with pytest.raises(ValueError):
        t_extend_with_uniform_context("b", "aabaabb")  # not uniform


def test_certificate_verify_rejects_tampering():
    cert = t_extend_uniform("abab")
    assert not TailCertificate(cert.Y, cert.r + 1, cert.seam).verify("abab")
    assert not TailCertificate("bb" + cert.Y, cert.r, cert.seam).verify("abab")
    assert not cert.verify("abbb")  # wrong word


def test_is_right_extendable_examples():
    assert is_right_extendable("abbabaab").extendable
    verdict = is_right_extendable("aa")
    assert verdict.extendable and verdict.certificate.verify("aa")
    assert not oracle.context_tree("aa", 20).exhausted

    dead = is_right_extendable(SHORTEST_DEAD)
    assert not dead.extendable
    assert dead.certificate is None
    assert dead.max_context_length == 0
    assert oracle.context_tree(SHORTEST_DEAD, 5).exhausted


def test_is_right_extendable_rejects_cubes():
    with pytest.raises(ValueError):
        is_right_extendable("bbb")
    with pytest.raises(ValueError):
        is_left_extendable("bbb")


def test_left_right_duality():
    for u in oracle.iter_cube_free(2, 9):
        left = is_left_extendable(u)
        mirrored = is_right_extendable(words.reverse(u))
        assert left.extendable == mirrored.extendable


def test_no_verdict_reports_tree_depth():
    # a dead word's reported depth matches the deepest level of its
    # exhausted context tree, for every dead word at desk scale
    n_dead = 0
    for u in oracle.iter_cube_free(2, 12):
        verdict = is_right_extendable(u)
        if verdict.extendable:
            continue
        rep = oracle.context_tree(u, 3 * len(u) + 30)
        assert rep.exhausted
        assert verdict.max_context_length == rep.max_depth, u
        n_dead += 1
    assert n_dead == 6


def test_heuristic_context_bound():
    verdict = is_right_extendable("ab", assume_context_bound=5)
    assert verdict.extendable and verdict.heuristic and verdict.certificate is None


def test_algorithm2_binary_examples():
    for u in ("abbabaab", "aab", "ab"):
        stats = {}
        cert = algorithm2(u, stats=stats)
        assert cert.verify(u)
        tail = thue_morse.tm_range(cert.r, cert.r + cert.verified_prefix(u))
        assert words.find_cube(u + cert.Y + tail) is None
        assert stats["stage2_iterations"] <= log_bound(max(2, len(u))) + 1


def test_algorithm2_ternary_uses_stage_one():
    stats = {}
    cert = algorithm2("abc", 3, stats=stats)
    assert cert.verify("abc")
    assert stats["stage1_iterations"] >= 1

    cert = algorithm2("c", 3)
    assert cert.verify("c")


def test_algorithm2_empty_word():
    for d in (2, 3):
        cert = algorithm2("", d)
        assert cert.verify("")
    assert (algorithm2("").Y, algorithm2("").r) == ("", 1)  # the whole of T


def test_algorithm2_rejects_dead_and_cubed_inputs():
    with pytest.raises(NotExtendableError):
        algorithm2(SHORTEST_DEAD)
    with pytest.raises(ValueError):
        algorithm2("aaa")


def test_chain_length_audit_examples():
    # no qualifying first step: the 3p-2 suffix would need length >= 4
    assert chain_length_audit("ab", "a") == 0
    # agreement with the oracle's greedy growth
    for u, w, k in oracle.greedy_chain_search(9):
        assert chain_length_audit(u, w) == k, (u, w)
    with pytest.raises(ValueError):
        chain_length_audit("aaa", "b")
    with pytest.raises(ValueError):
        chain_length_audit("ab", "b" * 9)


def test_chain_bound_holds_small():
    for u, w, k in oracle.greedy_chain_search(10):
        assert k <= log_bound(len(u)), (u, w, k)


def test_certificates_compose_through_the_tree():
    # words whose own node check fails still certify through a descendant
    verdict = is_right_extendable("ababa")
    assert verdict.extendable
    assert verdict.certificate.verify("ababa")


def _random_cube_free(rng, n, d=2):
    letters = words.letters_of(d)
    while True:
        w = ""
        while len(w) < n:
            options = [
                x for x in letters if words.append_check(w, x, assume_cube_free=True) is None
            ]
            if not options:
                break
            w += rng.choice(options)
        if len(w) == n:
            return w


def test_random_longer_words_certify():
    import random

    rng = random.Random(1618)
    for _ in range(25):
        u = _random_cube_free(rng, rng.randint(15, 28))
        verdict = is_right_extendable(u)
        if verdict.extendable:
            assert verdict.certificate.verify(u), u
            assert algorithm2(u).verify(u), u
    for _ in range(15):
        u = _random_cube_free(rng, rng.randint(9, 14), d=3)
        verdict = is_right_extendable(u, 3)
        assert verdict.extendable and verdict.certificate.verify(u), u
        assert algorithm2(u, 3).verify(u), u
