"""Exact integer number theory used by the spectra and verification modules.

Everything here works on Python ints, so values are arbitrary precision.
Factorization is trial division by small primes followed by Brent's
variant of Pollard rho; primality is Miller-Rabin with a fixed witness set.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

__all__ = [
    "Factorization",
    "RPartClass",
    "is_prime",
    "factorize",
    "prime_factors",
    "prime_power_base",
    "is_prime_power",
    "prime_powers",
    "primes_upto",
    "integer_nth_root",
    "r_part",
    "r_coprime_part",
    "euler_phi",
    "totient_sum",
    "totients_upto",
    "moebius",
    "divisors",
    "cyclotomic_eval",
    "mult_order",
    "primitive_prime_divisors",
    "has_primitive_prime_divisor",
    "largest_primitive_divisor",
    "largest_primitive_divisor_definitional",
    "power_diff_r_part",
    "cyclotomic_r_part_class",
]

TRIAL_BOUND = 1000

# Deterministic for n < 3.3 * 10**24 (Sorenson & Webster). Above that the same
# twelve bases are used as a strong probable-prime test.
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def primes_upto(n: int) -> list[int]:
    """Primes p <= n by the sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_SMALL_PRIMES = primes_upto(TRIAL_BOUND)
_SMALL_PRIME_SET = frozenset(_SMALL_PRIMES)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n <= TRIAL_BOUND:
        return n in _SMALL_PRIME_SET
    for p in _SMALL_PRIMES[:12]:
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((p1, e1), (p2, e2), ...)`` with p1 < p2 < ..."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        last = 1
        for p, e in self.entries:
            if p <= last or e < 1 or not is_prime(p):
                raise ValueError(f"invalid factorization entries {self.entries!r}")
            last = p

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    @property
    def value(self) -> int:
        n = 1
        for p, e in self.entries:
            n *= p**e
        return n

    def exponent_of(self, p: int) -> int:
        for q, e in self.entries:
            if q == p:
                return e
        return 0

    def __str__(self) -> str:
        if not self.entries:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.entries)


def _brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    if n % 2 == 0:
        return 2
    for c in range(1, n):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    root = math.isqrt(n)
    if root * root == n:
        _split(root, out)
        _split(root, out)
        return
    d = _brent(n)
    _split(d, out)
    _split(n // d, out)


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    found: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if n > 1:
        _split(n, found)
    return Factorization(tuple(sorted(found.items())))


def prime_factors(n: int) -> tuple[int, ...]:
    """pi(n): the sorted prime divisors of |n|."""
    return factorize(abs(n)).primes


def prime_power_base(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p**k, k >= 1, or None if n is not a prime power."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    return f.entries[0]


def is_prime_power(n: int) -> bool:
    return prime_power_base(n) is not None


def prime_powers(lo: int, hi: int, *, odd: bool = False) -> list[int]:
    """Sorted prime powers q with lo <= q <= hi (exponent >= 1)."""
    out = []
    for p in primes_upto(hi):
        if odd and p == 2:
            continue
        q = p
        while q <= hi:
            if q >= lo:
                out.append(q)
            q *= p
    return sorted(out)


def integer_nth_root(x: int, n: int) -> int:
    """floor(x ** (1/n)) for x >= 0, exactly."""
    if x < 0 or n < 1:
        raise ValueError("need x >= 0 and n >= 1")
    if x < 2 or n == 1:
        return x
    if n == 2:
        return math.isqrt(x)
    y = 1 << ((x.bit_length() + n - 1) // n)
    while True:
        z = ((n - 1) * y + x // y ** (n - 1)) // n
        if z >= y:
            break
        y = z
    while y**n > x:
        y -= 1
    while (y + 1) ** n <= x:
        y += 1
    return y


def _require_prime(r: int) -> None:
    if not is_prime(r):
        raise ValueError(f"{r} is not prime")


def r_part(n: int, r: int) -> int:
    """(n)_r, the largest power of the prime r dividing n."""
    _require_prime(r)
    if n < 1:
        raise ValueError(f"r-part needs n >= 1, got {n}")
    part = 1
    while n % r == 0:
        n //= r
        part *= r
    return part


def r_coprime_part(n: int, r: int) -> int:
    return n // r_part(n, r)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"phi needs n >= 1, got {n}")
    result = n
    for p in factorize(n).primes:
        result -= result // p
    return result


def totients_upto(n: int) -> list[int]:
    """[phi(0)=0, phi(1), ..., phi(n)] by a sieve."""
    phi = list(range(n + 1))
    for i in range(2, n + 1):
        if phi[i] == i:
            for j in range(i, n + 1, i):
                phi[j] -= phi[j] // i
    return phi


def totient_sum(n: int) -> int:
    """F(n) = phi(1) + ... + phi(n)."""
    if n < 1:
        raise ValueError(f"totient_sum needs n >= 1, got {n}")
    return sum(euler_phi(i) for i in range(1, n + 1))


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError(f"moebius needs n >= 1, got {n}")
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _check_base(a: int) -> None:
    if abs(a) <= 1:
        raise ValueError(f"base must satisfy |a| > 1, got {a}")


def cyclotomic_eval(m: int, a: int) -> int:
    """Phi_m(a) as a signed integer, via prod_{d|m} (a^d - 1)^mu(m/d)."""
    if m < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {m}")
    _check_base(a)
    num, den = 1, 1
    for d in divisors(m):
        mu = moebius(m // d)
        if mu == 1:
            num *= a**d - 1
        elif mu == -1:
            den *= a**d - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def mult_order(r: int, a: int) -> int:
    """e(r, a): order of a mod r for odd r; for r = 2, 1 if 4 | a-1 else 2."""
    _require_prime(r)
    if a % r == 0:
        raise ValueError(f"{r} divides {a}")
    if r == 2:
        return 1 if (a - 1) % 4 == 0 else 2
    a %= r
    k = r - 1
    for p, _ in factorize(r - 1):
        while k % p == 0 and pow(a, k // p, r) == 1:
            k //= p
    return k


def largest_primitive_divisor_definitional(m: int, a: int) -> int:
    """k_m(a) straight from the definition, without cyclotomic polynomials.

    Starting from |a^m - 1| (or |a + 1| when m = 2) every odd prime that also
    divides some a^d - 1 with d a proper divisor of m is stripped by repeated
    gcds; what is left is the product of the full r-parts of the odd
    primitive prime divisors. The prime 2 is handled by the e(2, a)
    convention.
    """
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    _check_base(a)
    n = abs(a + 1) if m == 2 else abs(a**m - 1)
    full = n
    while n % 2 == 0:
        n //= 2
    for d in divisors(m)[:-1]:
        g = math.gcd(n, a**d - 1)
        while g > 1:
            n //= g
            g = math.gcd(n, g)
    if a % 2 and mult_order(2, a) == m:
        n *= r_part(full, 2)
    return n


def has_primitive_prime_divisor(m: int, a: int) -> bool:
    """Whether R_m(a) is nonempty; never factors anything."""
    return largest_primitive_divisor_definitional(m, a) > 1


def primitive_prime_divisors(m: int, a: int) -> frozenset[int]:
    """R_m(a), the primes r with e(r, a) = m.

    Factors k_m(a), so the cost grows with the size of a^phi(m).
    """
    k = largest_primitive_divisor_definitional(m, a)
    return frozenset(factorize(k).primes)


def largest_primitive_divisor(m: int, a: int) -> int:
    """k_m(a); 1 on the Bang-Zsigmondy exceptions.

    For m >= 3 uses |Phi_m(a)| / (r, Phi_l(a)) with r the largest prime
    divisor of m and l the r'-part of m.
    """
    if m < 3:
        return largest_primitive_divisor_definitional(m, a)
    r = prime_factors(m)[-1]
    l = r_coprime_part(m, r)
    return abs(cyclotomic_eval(m, a)) // math.gcd(r, cyclotomic_eval(l, a))


def power_diff_r_part(a: int, m: int, eps: int, r: int) -> int:
    """(a^m - eps^m)_r by the lifting-the-exponent closed form."""
    _require_prime(r)
    _check_base(a)
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")
    if m < 1:
        raise ValueError(f"exponent must be >= 1, got {m}")
    if (a - eps) % r:
        raise ValueError(f"{a} is not congruent to {eps} mod {r}")
    if r == 2 and (eps != 1 or (a - 1) % 4):
        raise ValueError("r = 2 needs eps = +1 and a = 1 mod 4")
    return r_part(m, r) * r_part(abs(a - eps), r)


class RPartClass(enum.Enum):
    FULL = "full"  # (Phi_m(a))_r > 1 and may exceed r
    EXACTLY_R = "exactly_r"  # (Phi_m(a))_r == r
    UNIT = "unit"  # r does not divide Phi_m(a)


def cyclotomic_r_part_class(m: int, a: int, r: int) -> RPartClass:
    """Predict (Phi_m(a))_r from e(r, a) alone."""
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    _check_base(a)
    k = mult_order(r, a)
    if m == k:
        return RPartClass.FULL
    if r == 2:
        # the other of a -+ 1 is 2 mod 4
        if m in (1, 2) or (m & (m - 1) == 0):
            return RPartClass.EXACTLY_R
        return RPartClass.UNIT
    if m % k == 0:
        rest = m // k
        while rest % r == 0:
            rest //= r
        if rest == 1:
            return RPartClass.EXACTLY_R
    return RPartClass.UNIT
