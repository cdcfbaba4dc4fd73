"""Uniform words and markers: the local anatomy of binary cube-free words.

A word is uniform when it is a morphism image c + theta(u) + d up to one
spare letter on each side; equivalently, all of its aa/bb occurrences sit
at positions of one parity.  Cube-free words split into uniform stretches
separated by the four markers aabaa, ababa, babab, bbabb.
"""

from cubefree import (
    factorize,
    is_right_aligned,
    is_uniform,
    non_uniform_witness,
    scan_markers,
)
from cubefree.oracle import theta_decompose

print("-- uniformity, three ways --")
for w in ("abba", "babba", "abab", "aabaa", "aababaa", "aabaabba"):
    dec = theta_decompose(w)
    witness = non_uniform_witness(w)
    print(
        f"{w!r:12} uniform={is_uniform(w)!s:5} right-aligned={is_right_aligned(w)!s:5} "
        f"decomposition={dec} witness={witness}"
    )

print()
print("-- markers break uniformity --")
w = "abaababaabbabb"
print(f"{w}: markers {[(m.kind, m.position) for m in scan_markers(w)]}")

print()
print("-- marker factorization: split after every marker --")
for w in ("aabaabbabb", "bbabb", "aabaabaa", "abaababaabbabb"):
    fact = factorize(w)
    print(f"{w}: {' | '.join(fact.segments)}")
print("(segments end at each marker's last letter, even when markers overlap)")
