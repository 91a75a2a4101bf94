"""Gruenberg-Kegel prime graphs and cocliques.

Vertices are the primes dividing the group order; r and s are joined when
the group has an element of order rs. The primes not joined to 2 in
GK(S6(q)) are exactly the primitive prime divisors R_6(eps q).
"""

from isospec import primegraph
from isospec.arith import primitive_prime_divisors
from isospec.spectra import Family, GroupId, omega_basis

g = GroupId(Family.S6, 5)
gk = primegraph.build(omega_basis(g))
print(f"GK({g}) edges:", gk.edges())
t, w = primegraph.max_coclique(gk)
print(f"t = {t}, least maximum coclique {sorted(w)}")
print("t(2) =", primegraph.max_coclique_through(gk, 2)[0])

for q in (7, 9, 11, 13, 17, 19, 23, 25, 27):
    eps = 1 if q % 4 == 1 else -1
    gk = primegraph.build(omega_basis(GroupId(Family.O7, q)))
    print(
        f"O7({q}): not joined to 2: {sorted(primegraph.nonneighbors(gk, 2))}"
        f"   R_6({eps * q}) = {sorted(primitive_prime_divisors(6, eps * q))}"
    )

print()
print(primegraph.to_dot(primegraph.build(omega_basis(GroupId(Family.Sz, 8))), "GK(2B2(8))"))
