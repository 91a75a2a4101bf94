"""Running the elimination filters over candidate groups.

A candidate S survives when pi(S) lies in pi(L), k_6(eps q) is an element
order of S and every maximal element order of S is an element order of L.
Groups known only through an exponent bound are dropped once that bound
reaches q^9.
"""

from collections import Counter

from isospec import verify
from isospec.spectra import Family, GroupId

target = GroupId(Family.S6, 5)
verdicts = verify.scan_candidates(target, verify.Q5_FAMILIES, 64)
print(f"{len(verdicts)} candidates against {target}")
print(Counter(v.eliminated_by.value for v in verdicts))
for v in verdicts:
    if v.survived:
        missing = verify.coclique_uncovered(target, v.candidate, (7, 13, 31))
        print(f"  survivor {v.candidate}: primes of (7, 13, 31) outside pi = {missing}")

print()
for v in verify.scan_candidates(GroupId(Family.S6, 7), [Family.E8, Family.E7, Family.E6], 3):
    print(" ", v)
