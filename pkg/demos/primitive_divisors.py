"""Primitive prime divisors and the numbers k_m(a).

A prime r is a primitive divisor of a^m - 1 when m is the multiplicative
order of a modulo r. The script prints R_m(a) and k_m(a) for a few bases,
lists the pairs where R_m(a) is empty and checks the closed form of k_m(a)
against the gcd-stripping definition.
"""

from isospec.arith import (
    cyclotomic_eval,
    largest_primitive_divisor,
    largest_primitive_divisor_definitional,
    primitive_prime_divisors,
)

for m, a in [(6, -7), (3, -7), (6, 2), (8, 7), (8, 17), (9, 3)]:
    r = sorted(primitive_prime_divisors(m, a))
    print(f"Phi_{m}({a}) = {cyclotomic_eval(m, a):>6}   R_{m}({a}) = {r}   k = {largest_primitive_divisor(m, a)}")

empty = [
    (a, m)
    for size in range(2, 21)
    for a in (size, -size)
    for m in range(1, 21)
    if largest_primitive_divisor_definitional(m, a) == 1
]
print("\nR_m(a) is empty for (a, m) in", empty)

# the closed form never disagrees with the definition
bad = [
    (m, a)
    for a in range(-30, 31)
    if abs(a) > 1
    for m in range(3, 25)
    if largest_primitive_divisor(m, a) != largest_primitive_divisor_definitional(m, a)
]
print("closed form mismatches:", bad or "none")
