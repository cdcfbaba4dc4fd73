"""Cube detection: witnesses, incremental checks, and enumeration.

A cube is a factor of the form xxx.  The detector reports the leftmost
occurrence (smallest period on ties) as a (position, period) witness;
positions are 1-based.
"""

from cubefree import append_check, find_cube, is_cube_free
from cubefree.oracle import enumerate_cube_free

print("-- batch detection --")
for w in ("banana", "abbabaab", "aabaabaab", "babbb"):
    witness = find_cube(w)
    if witness is None:
        print(f"{w}: cube-free")
    else:
        print(f"{w}: cube {witness.root(w)!r}^3 at position {witness.position}")

print()
print("-- growing a word one letter at a time --")
# only suffixes can become cubes when a letter is appended, so the
# incremental check is cheap; this is what all the searches build on
w = ""
for x in "abbabaaba":
    hit = append_check(w, x)
    status = "ok" if hit is None else f"creates {hit.root(w + x)!r}^3"
    print(f"{w!r} + {x!r}: {status}")
    if hit is None:
        w += x

print()
print("-- how many cube-free words are there? --")
for n in range(11):
    print(f"length {n:2d}: {enumerate_cube_free(2, n).count:4d} binary, "
          f"{enumerate_cube_free(3, n).count:6d} ternary")
print("(the binary language grows roughly like 1.457^n)")
