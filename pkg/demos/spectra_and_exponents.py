"""Spectra as divisibility bases, and exponents.

omega(L) is stored by its maximal elements mu(L); membership is a divisibility
test. For S6(q), O7(q) and O8+(q) the exponent has a closed form that must
agree with the lcm of the basis.
"""

from isospec.spectra import (
    Family,
    GroupId,
    bruteforce_omega_psl2,
    exponent,
    exponent_lower_bound,
    exponent_prime_to_v,
    omega_basis,
)

for g in [GroupId(Family.S6, 5), GroupId(Family.O7, 5), GroupId(Family.O8Plus, 5)]:
    b = omega_basis(g)
    print(f"{str(g):8} mu = {sorted(b.generators)}")
    print(f"{'':8} pi = {sorted(b.primes())}, exp = {exponent(g)}, lcm = {b.lcm()}")

b = omega_basis(GroupId(Family.S6, 5))
print("\n91 in omega(S6(5)):", 91 in b, "  39 in omega(S6(5)):", 39 in b)

# the L2 formula against a full enumeration of SL2(u)
for u in (7, 8, 9):
    f = omega_basis(GroupId(Family.PSL2, u))
    closure = {d for d in range(1, f.lcm() + 1) if d in f}
    print(f"L2({u}): formula {sorted(closure)}  enumeration {sorted(bruteforce_omega_psl2(u))}")

print()
for g in [GroupId(Family.LinearN, 3, 4), GroupId(Family.SymplecticN, 3, 5), GroupId(Family.E7, 2)]:
    print(f"{str(g):6} exp_v' = {exponent_prime_to_v(g)}   exp > {exponent_lower_bound(g)}")
