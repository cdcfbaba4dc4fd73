"""Extendability: can a cube-free word grow to the right forever?

The decision is constructive in both directions.  A yes comes with a
tail certificate (Y, r): the single infinite word u + Y + T[r..] is
cube-free, and a finite check of its prefix proves it (a cube touching
the finite part would need a period so large that an overlap would
appear inside the overlap-free T).  A no comes from exhausting the whole
finite tree of right contexts.
"""

from cubefree import algorithm2, is_left_extendable, is_right_extendable, tm_range
from cubefree.oracle import context_tree

print("-- a word that dies: aabaabaa --")
for x in "ab":
    print(f"aabaabaa + {x} ends with a cube")
verdict = is_right_extendable("aabaabaa")
print(f"verdict: extendable={verdict.extendable}, max context length {verdict.max_context_length}")

print()
print("-- a word that lives: every short word, for instance 'aa' --")
verdict = is_right_extendable("aa")
cert = verdict.certificate
print(f"certificate: Y={cert.Y!r}, r={cert.r}")
print(f"aa + {cert.Y} + T[{cert.r}..] starts {'aa' + cert.Y + tm_range(cert.r, cert.r + 24)}...")
print(f"verified: {cert.verify('aa')}")

print()
print("-- left extendability is the mirror decision --")
print("abbabaab left-extendable:", is_left_extendable("abbabaab").extendable)

print()
print("-- explicit infinite contexts for bigger alphabets --")
cert = algorithm2("abc", 3)
print(f"abc over {{a,b,c}}: Y={cert.Y!r}, r={cert.r}")
print(f"word: abc + {cert.Y} + T[{cert.r}..]")

print()
print("-- the tree view of a blocked word --")
rep = context_tree("ababa", 3, full=True)
print(f"contexts of 'ababa' per length: { {k: sorted(v) for k, v in rep.words_at_depth.items()} }")
print("(every right context of ababa begins with a)")
