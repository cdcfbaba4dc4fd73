"""The Thue-Morse word T: the engine behind every explicit construction.

T = abbabaab... is the fixed point of a -> ab, b -> ba starting with a.
It is overlap-free (hence cube-free), uniformly recurrent, and its factor
set is closed under reversal and letter exchange, which is exactly what
the extension and transition constructions lean on.
"""

from cubefree import (
    find_occurrence_after,
    is_cube_free,
    is_tm_factor,
    reverse,
    splice_pattern,
    tm_prefix,
    tm_range,
)
from cubefree.oracle import is_overlap_free

print("-- prefixes via the morphism --")
for k in range(6):
    print(f"theta^{k}(a) = {tm_prefix(2 ** k)}")

print()
print("-- global structure --")
t = tm_prefix(4096)
print("prefix of length 4096 cube-free:", is_cube_free(t))
print("prefix of length 4096 overlap-free:", is_overlap_free(t))

print()
print("-- factor queries --")
for w in ("abba", "aabb", "aaa", "aabaa", "ababa"):
    print(f"{w!r} occurs in T: {is_tm_factor(w)}")

print()
print("-- uniform recurrence: every factor recurs with a bounded gap --")
pattern = "abbabaab"
pos = 1
for _ in range(5):
    pos = find_occurrence_after(pattern, pos)
    print(f"{pattern} occurs at position {pos}")
    pos += 1

print()
print("-- splicing: a factor of T that starts and ends as prescribed --")
u1, v1r = tm_range(1, 6), reverse(tm_range(3, 8))
w = splice_pattern(u1, v1r)
print(f"start {u1!r}, end {v1r!r}: spliced factor {w!r} (length {len(w)})")
