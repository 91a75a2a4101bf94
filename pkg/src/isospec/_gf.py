"""Table-driven arithmetic in a small finite field GF(p^k).

Elements are the integers 0..q-1 read as base-p digit vectors, i.e. the
coefficients of a polynomial of degree < k. Multiplication reduces modulo the
first monic irreducible polynomial of degree k found by exhaustive search.
Only meant for tiny fields (the PSL_2 oracle).
"""

from __future__ import annotations

from itertools import product

from .arith import prime_power_base


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _number(coeffs: list[int], p: int) -> int:
    x = 0
    for c in reversed(coeffs):
        x = x * p + c
    return x


def _polymulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    # reduce with the monic modulus, highest degree first
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c:
            for i in range(k + 1):
                prod[deg - k + i] = (prod[deg - k + i] - c * modulus[i]) % p
    return prod[:k]


def _has_root_free_factorization(modulus: list[int], p: int) -> bool:
    """Irreducibility for degree <= 3: no roots in GF(p)."""
    for x in range(p):
        if sum(c * x**i for i, c in enumerate(modulus)) % p == 0:
            return False
    return True


def find_irreducible(p: int, k: int) -> list[int]:
    """Coefficients (low degree first) of a monic irreducible of degree k."""
    if k > 3:
        raise ValueError("only degrees up to 3 are supported")
    for tail in product(range(p), repeat=k):
        modulus = list(tail) + [1]
        if modulus[0] and _has_root_free_factorization(modulus, p):
            return modulus
    raise ArithmeticError(f"no irreducible of degree {k} over GF({p})")


class GaloisField:
    def __init__(self, q: int):
        base = prime_power_base(q)
        if base is None:
            raise ValueError(f"{q} is not a prime power")
        p, k = base
        self.q, self.p, self.k = q, p, k
        digits = [_digits(x, p, k) for x in range(q)]
        self.add = [
            [_number([(a + b) % p for a, b in zip(digits[x], digits[y])], p) for y in range(q)]
            for x in range(q)
        ]
        self.neg = [_number([(-a) % p for a in digits[x]], p) for x in range(q)]
        if k == 1:
            self.mul = [[x * y % p for y in range(q)] for x in range(q)]
        else:
            modulus = find_irreducible(p, k)
            self.mul = [
                [_number(_polymulmod(digits[x], digits[y], modulus, p), p) for y in range(q)]
                for x in range(q)
            ]
