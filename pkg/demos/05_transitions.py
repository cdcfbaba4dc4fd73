"""Transition words: joining two cube-free words through a cube-free bridge.

Whenever u can grow right forever and v can grow left forever, some w
makes u + w + v cube-free.  The decision short-circuits through direct
context searches; the general construction extends both sides with
Thue-Morse tails and splices the two tails inside T itself.  Words over
bigger alphabets route through binary stretches anchored by c-letters.
"""

from cubefree import (
    construct_transition,
    is_cube_free,
    transition_dary,
    transition_exists,
)

print("-- deciding and materializing --")
for u, v in (("aa", "bb"), ("ababa", "babab"), ("aabaabaa", "a")):
    res = transition_exists(u, v)
    if res.exists:
        print(f"({u!r}, {v!r}): witness {res.witness!r} via {res.method.value}")
        assert is_cube_free(u + res.witness + v)
    else:
        print(f"({u!r}, {v!r}): impossible ({res.method.value})")

print()
print("-- the Thue-Morse splice construction --")
u = v = "abbabaab"
w = construct_transition(u, v)
print(f"transition for two copies of {u}: length {len(w)}")
print(f"{u} + {w[:24]}...{w[-24:]} + {v}")
print("cube-free:", is_cube_free(u + w + v))

print()
print("-- three letters: binary bridges anchored by c-letters --")
w = transition_dary("ab", "ba", 3)
print(f"('ab', 'ba') over {{a,b,c}}: {w}")
print("cube-free:", is_cube_free("ab" + w + "ba"))
w = transition_dary("abcba", "abcba", 3)
print(f"('abcba', 'abcba'): length {len(w)}, cube-free: {is_cube_free('abcba' + w + 'abcba')}")
