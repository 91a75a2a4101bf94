"""Spectra, maximal orders, prime sets and exponents of groups of Lie type.

A spectrum is stored as its set of divisibility-maximal elements; membership
is a divisibility test against that set. Families whose full spectrum is not
available here (the E-series, 2F4, classical groups of arbitrary rank) only
expose exponent data.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import reduce

from .arith import (
    cyclotomic_eval,
    factorize,
    integer_nth_root,
    prime_power_base,
    totient_sum,
)

__all__ = [
    "Family",
    "GroupId",
    "SpectrumBasis",
    "UnsupportedFamily",
    "SPECTRUM_FAMILIES",
    "EXPONENT_FAMILIES",
    "BOUND_FAMILIES",
    "CLASSICAL_FAMILIES",
    "omega_basis",
    "mu",
    "pi",
    "contains",
    "exponent",
    "exponent_prime_to_v",
    "exponent_lower_bound",
    "v_exponent_floor",
    "bruteforce_omega_psl2",
]


class UnsupportedFamily(ValueError):
    pass


class Family(str, enum.Enum):
    S6 = "S6"
    O7 = "O7"
    O8Plus = "O8Plus"
    PSL2 = "PSL2"
    Sz = "Sz"
    Ree = "Ree"
    G2 = "G2"
    TriD4 = "TriD4"
    F4 = "F4"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    TwistedF4 = "TwistedF4"
    LinearN = "LinearN"
    UnitaryN = "UnitaryN"
    SymplecticN = "SymplecticN"
    OrthOddN = "OrthOddN"
    OrthPlusN = "OrthPlusN"
    OrthMinusN = "OrthMinusN"


F = Family
SPECTRUM_FAMILIES = frozenset({F.S6, F.O7, F.O8Plus, F.PSL2, F.Sz, F.Ree, F.G2, F.TriD4, F.F4})
CLASSICAL_FAMILIES = frozenset(
    {F.LinearN, F.UnitaryN, F.SymplecticN, F.OrthOddN, F.OrthPlusN, F.OrthMinusN}
)
EXPONENT_FAMILIES = SPECTRUM_FAMILIES | {F.E6, F.E7, F.E8, F.TwistedF4}
BOUND_FAMILIES = CLASSICAL_FAMILIES | {F.E6, F.E7, F.E8, F.TwistedF4}

_MIN_RANK = {
    F.LinearN: 3,
    F.UnitaryN: 3,
    F.SymplecticN: 2,
    F.OrthOddN: 2,
    F.OrthPlusN: 4,
    F.OrthMinusN: 4,
}

# smallest field sizes giving simple groups; Sz, Ree and 2F4 are handled by exponent parity
_MIN_FIELD = {F.PSL2: 4, F.G2: 3}


@dataclass(frozen=True, order=True)
class GroupId:
    """A finite simple group of Lie type named by family and field size.

    ``sign`` is tau for E6 (+1 for E6, -1 for 2E6) and is fixed by the family
    for LinearN (+1) and UnitaryN (-1). ``rank`` is n for the classical
    families: L_n, U_n, S_2n, O_2n+1, O+_2n, O-_2n.
    """

    family: Family
    q: int
    rank: int | None = None
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        fam = self.family
        base = prime_power_base(self.q)
        if base is None:
            raise ValueError(f"field size {self.q} is not a prime power")
        p, k = base
        if fam is F.UnitaryN:
            object.__setattr__(self, "sign", -1)
        elif fam is not F.E6:
            object.__setattr__(self, "sign", 1)
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if fam in (F.S6, F.O7, F.O8Plus) and p == 2:
            raise ValueError(f"{fam.value} needs odd q, got {self.q}")
        if fam is F.Sz and (p != 2 or k % 2 == 0 or k < 3):
            raise ValueError(f"Sz needs q = 2^(2m+1) with m >= 1, got {self.q}")
        if fam is F.Ree and (p != 3 or k % 2 == 0 or k < 3):
            raise ValueError(f"Ree needs q = 3^(2m+1) with m >= 1, got {self.q}")
        if fam is F.TwistedF4 and (p != 2 or k % 2 == 0 or k < 3):
            raise ValueError(f"2F4 needs q = 2^(2m+1) with m >= 1, got {self.q}")
        if self.q < _MIN_FIELD.get(fam, 2):
            raise ValueError(f"{fam.value}({self.q}) is not simple")
        if fam in CLASSICAL_FAMILIES:
            if self.rank is None or self.rank < _MIN_RANK[fam]:
                raise ValueError(f"{fam.value} needs rank >= {_MIN_RANK[fam]}, got {self.rank}")
        elif self.rank is not None:
            raise ValueError(f"{fam.value} takes no rank")

    @property
    def char(self) -> int:
        return factorize(self.q).primes[0]

    @property
    def eps(self) -> int:
        """+1 if q = 1 mod 4, -1 if q = 3 mod 4."""
        if self.q % 2 == 0:
            raise ValueError("eps is only defined for odd q")
        return 1 if self.q % 4 == 1 else -1

    @property
    def tau(self) -> int:
        return self.sign

    def __str__(self) -> str:
        q, n = self.q, self.rank
        names = {
            F.S6: f"S6({q})",
            F.O7: f"O7({q})",
            F.O8Plus: f"O8+({q})",
            F.PSL2: f"L2({q})",
            F.Sz: f"2B2({q})",
            F.Ree: f"2G2({q})",
            F.G2: f"G2({q})",
            F.TriD4: f"3D4({q})",
            F.F4: f"F4({q})",
            F.E6: f"E6({q})" if self.sign == 1 else f"2E6({q})",
            F.E7: f"E7({q})",
            F.E8: f"E8({q})",
            F.TwistedF4: f"2F4({q})",
            F.LinearN: f"L{n}({q})",
            F.UnitaryN: f"U{n}({q})",
            F.SymplecticN: f"S{2 * n if n else '?'}({q})",
            F.OrthOddN: f"O{2 * n + 1 if n else '?'}({q})",
            F.OrthPlusN: f"O{2 * n if n else '?'}+({q})",
            F.OrthMinusN: f"O{2 * n if n else '?'}-({q})",
        }
        return names[self.family]


@dataclass(frozen=True)
class SpectrumBasis:
    """Divisor-closed set of naturals given by its maximal elements."""

    generators: frozenset[int]

    @classmethod
    def from_numbers(cls, numbers) -> "SpectrumBasis":
        nums = sorted(set(numbers))
        if any(n < 1 for n in nums):
            raise ValueError("spectrum generators must be positive")
        keep = [
            n for i, n in enumerate(nums) if not any(m % n == 0 for m in nums[i + 1 :])
        ]
        return cls(frozenset(keep))

    def __contains__(self, a: int) -> bool:
        return a >= 1 and any(g % a == 0 for g in self.generators)

    def __iter__(self):
        return iter(sorted(self.generators))

    def __len__(self) -> int:
        return len(self.generators)

    def primes(self) -> frozenset[int]:
        return frozenset(p for g in self.generators for p in factorize(g).primes)

    def lcm(self) -> int:
        return reduce(math.lcm, self.generators, 1)

    def issubset(self, other: "SpectrumBasis") -> bool:
        return all(g in other for g in self.generators)


def _exact(num: int, den: int) -> int:
    value, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return value


def _c3_numbers(q: int, p: int, d: int) -> list[int]:
    nums = [
        (q**3 + 1) // 2,
        (q**3 - 1) // 2,
        (q**2 + 1) * (q + 1) // 2,
        (q**2 + 1) * (q - 1) // 2,
        q**2 - 1,
        _exact(p * (q**2 + 1), d),
        _exact(p * (q**2 - 1), d),
    ]
    if p == 3:
        nums += [_exact(9 * (q + 1), d), _exact(9 * (q - 1), d)]
    if p == 5:
        nums.append(25)
    return nums


def _isqrt_exact(n: int) -> int:
    root = math.isqrt(n)
    if root * root != n:
        raise ArithmeticError(f"{n} is not a square")
    return root


def _basis_numbers(g: GroupId) -> list[int]:
    u, v = g.q, g.char
    fam = g.family
    if fam is F.S6:
        return _c3_numbers(u, v, 1)
    if fam is F.O7:
        return _c3_numbers(u, v, 2)
    if fam is F.O8Plus:
        return _c3_numbers(u, v, 2) + [(u**4 - 1) // 4]
    if fam is F.PSL2:
        d = math.gcd(2, u - 1)
        return [v, (u - 1) // d, (u + 1) // d]
    if fam is F.Sz:
        s = _isqrt_exact(2 * u)
        return [4, u - 1, u + s + 1, u - s + 1]
    if fam is F.Ree:
        s = _isqrt_exact(3 * u)
        return [9, 6, (u + 1) // 2, u - 1, u + s + 1, u - s + 1]
    if fam is F.G2:
        nums = [u * u + u + 1, u * u - u + 1, u * u - 1, v * (u + 1), v * (u - 1)]
        if v == 2:
            nums += [8, 12]
        if v in (3, 5):
            nums.append(v * v)
        return nums
    if fam is F.F4:
        nums = [
            u**4 - u**2 + 1,
            u**4 + 1,
            (u**2 + u + 1) * (u**2 - 1),
            (u**2 - u + 1) * (u**2 - 1),
            (u**4 - 1) // math.gcd(2, u - 1),
            v * (u**3 + 1),
            v * (u**3 - 1),
            v * (u**2 + 1) * (u + 1),
            v * (u**2 + 1) * (u - 1),
            v * (u**2 - 1),
        ]
        if v == 2:
            nums += [
                4 * (u**2 + 1),
                4 * (u**2 - 1),
                4 * (u**2 + u + 1),
                4 * (u**2 - u + 1),
                8 * (u + 1),
                8 * (u - 1),
                16,
            ]
        elif v == 3:
            nums += [9 * (u**2 + 1), 9 * (u**2 - 1), 27]
        elif v == 5:
            nums += [25 * (u + 1), 25 * (u - 1)]
        elif v == 7:
            nums.append(49 * 2)
        elif v == 11:
            nums.append(121)
        return nums
    if fam is F.TriD4:
        nums = [
            u**4 - u**2 + 1,
            (u**2 + u + 1) * (u**2 - 1),
            (u**2 - u + 1) * (u**2 - 1),
            v * (u**3 + 1),
            v * (u**3 - 1),
        ]
        if v == 2:
            nums += [4 * (u**2 + u + 1), 4 * (u**2 - u + 1), 8]
        if v in (3, 5):
            nums.append(v * v)
        return nums
    raise UnsupportedFamily(f"no spectrum available for {g}")


def omega_basis(g: GroupId) -> SpectrumBasis:
    return SpectrumBasis.from_numbers(_basis_numbers(g))


def mu(g: GroupId) -> frozenset[int]:
    return omega_basis(g).generators


def pi(g: GroupId) -> frozenset[int]:
    return omega_basis(g).primes()


def contains(b: SpectrumBasis, a: int) -> bool:
    return a in b


# Coxeter numbers; the v-exponent of the group is the least power of v that is >= h
_COXETER = {F.E6: 12, F.E7: 18, F.E8: 30}


def v_exponent_floor(g: GroupId) -> int:
    """A lower bound on exp_v(S) used by the exponent estimates.

    n for L_n/U_n, 2n for S_2n and O_2n+1, 2n-1 for O+-_2n, 13/19/31 for
    E6/E7/E8.
    """
    fam, n = g.family, g.rank
    if fam in (F.LinearN, F.UnitaryN):
        return n
    if fam in (F.SymplecticN, F.OrthOddN):
        return 2 * n
    if fam in (F.OrthPlusN, F.OrthMinusN):
        return 2 * n - 1
    if fam in _COXETER:
        return _COXETER[fam] + 1
    raise UnsupportedFamily(f"no v-exponent bound for {g}")


def _least_power_at_least(v: int, bound: int) -> int:
    x = v
    while x < bound:
        x *= v
    return x


def exponent(g: GroupId) -> int:
    fam, q, p = g.family, g.q, g.char
    if fam in (F.S6, F.O7, F.O8Plus):
        factor = p * p if p in (3, 5) else p
        return factor * (q**6 - 1) * (q**2 + 1) // 2
    if fam is F.TwistedF4:
        return _exact(16 * (q**6 + 1) * (q**3 + 1) * (q - 1), 3)
    if fam in _COXETER:
        return exponent_prime_to_v(g) * _least_power_at_least(p, _COXETER[fam])
    if fam in SPECTRUM_FAMILIES:
        return omega_basis(g).lcm()
    raise UnsupportedFamily(f"no exponent available for {g}")


def _prod_phi(indices, base: int, absolute: bool = False) -> int:
    out = 1
    for i in indices:
        val = cyclotomic_eval(i, base)
        out *= abs(val) if absolute else val
    return out


def _symplectic_part(n: int, u: int) -> int:
    d = math.gcd(2, u - 1)
    c = d * d if n & (n - 1) == 0 else d
    return _exact(_prod_phi(range(1, n + 1), u * u), c)


def exponent_prime_to_v(g: GroupId) -> int:
    """exp_{v'}(S): the part of the exponent coprime to the characteristic."""
    fam, u, n = g.family, g.q, g.rank
    if fam in (F.LinearN, F.UnitaryN):
        tau = g.tau
        prod = _prod_phi(range(1, n + 1), tau * u, absolute=True)
        base = prime_power_base(n)
        c = 1
        if base is not None and (u - tau) % base[0] == 0:
            c = base[0]
        return _exact(prod, c)
    if fam in (F.SymplecticN, F.OrthOddN):
        return _symplectic_part(n, u)
    if fam is F.OrthMinusN:
        if n % 2 == 0:
            return _symplectic_part(n, u)
        prod = cyclotomic_eval(2 * n, u) * _prod_phi(range(1, n), u * u)
        return _exact(prod, math.gcd(2, u - 1))
    if fam is F.OrthPlusN:
        if n % 2 == 0:
            return _symplectic_part(n - 1, u)
        prod = cyclotomic_eval(n, u) * _prod_phi(range(1, n), u * u)
        return _exact(prod, math.gcd(2, u - 1))
    if fam is F.E8:
        num = (
            (u**20 + u**10 + 1)
            * (u**12 + u**6 + 1)
            * (u**12 + 1)
            * (u**6 + 1)
            * (u**20 - 1)
            * (u**14 - 1)
        )
        den = (u**4 - 1) * math.gcd(5, u**2 + 1) * math.gcd(3, u**2 - 1)
        return _exact(num, den)
    if fam is F.E7:
        num = (u**12 + u**6 + 1) * (u**14 - 1) * (u**10 - 1) * (u**12 - 1) * (u**4 + 1)
        den = (u**2 - 1) ** 2 * math.gcd(6, u**2 - 1)
        return _exact(num, den)
    if fam is F.E6:
        t = g.tau
        num = (u**6 + t * u**3 + 1) * (u**5 - t) * (u**12 - 1)
        den = (u - t) * math.gcd(6, u - t)
        return _exact(num, den)
    raise UnsupportedFamily(f"no v'-exponent formula for {g}")


def _floor_scaled_power(num: int, den: int, u: int, e_num: int, e_den: int) -> int:
    """floor((num/den) * u^(e_num/e_den)) exactly."""
    root = integer_nth_root(num**e_den * u**e_num, e_den)
    return root // den


def exponent_lower_bound(g: GroupId) -> int:
    """Integer part of the stated strict lower bound on exp(S)."""
    fam, u, n = g.family, g.q, g.rank
    if fam in (F.LinearN, F.UnitaryN):
        base = prime_power_base(n)
        c = base[0] if base is not None and (u - g.tau) % base[0] == 0 else 1
        return _floor_scaled_power(n, c, u, 3 * totient_sum(n), 4)
    if fam in (F.SymplecticN, F.OrthOddN):
        return _floor_scaled_power(n, 2, u, 3 * totient_sum(n), 2)
    if fam is F.OrthMinusN:
        if n % 2 == 0:
            return _floor_scaled_power(2 * n - 1, 4, u, 3 * totient_sum(n), 2)
        return _floor_scaled_power(
            2 * n - 1, 2, u, 3 * (totient_sum(n) + totient_sum(n - 1)), 4
        )
    if fam is F.OrthPlusN:
        if n % 2 == 0:
            return _floor_scaled_power(n - 1, 2, u, 3 * totient_sum(n - 1), 2)
        return _floor_scaled_power(
            2 * n - 1, 2, u, 3 * (totient_sum(n) + totient_sum(n - 1)), 4
        )
    if fam is F.E8:
        return 2 * u**80
    if fam is F.E7:
        return 3 * u**48
    if fam is F.E6:
        return u**22
    if fam is F.TwistedF4:
        return 16 * u**9 * (u - 1) // 3
    raise UnsupportedFamily(f"no exponent bound for {g}")


def _field(u: int):
    from ._gf import GaloisField

    return GaloisField(u)


def bruteforce_omega_psl2(u: int) -> frozenset[int]:
    """Element orders of PSL_2(u) by enumerating SL_2(u) modulo -I."""
    if prime_power_base(u) is None:
        raise ValueError(f"{u} is not a prime power")
    if u > 13:
        raise ValueError(f"enumeration capped at u <= 13, got {u}")
    gf = _field(u)
    add, mul, neg = gf.add, gf.mul, gf.neg
    one = 1
    elems = range(u)
    identity = (one, 0, 0, one)
    minus_identity = (neg[one], 0, 0, neg[one])

    def matmul(x, y):
        a, b, c, d = x
        e, f, g_, h = y
        return (
            add[mul[a][e]][mul[b][g_]],
            add[mul[a][f]][mul[b][h]],
            add[mul[c][e]][mul[d][g_]],
            add[mul[c][f]][mul[d][h]],
        )

    sl2 = [
        (a, b, c, d)
        for a in elems
        for b in elems
        for c in elems
        for d in elems
        if add[mul[a][d]][neg[mul[b][c]]] == one
    ]
    cap = len(sl2)
    orders = set()
    for m in sl2:
        power, k = m, 1
        while power != identity and power != minus_identity:
            power = matmul(power, m)
            k += 1
            if k > cap:
                raise ArithmeticError("order exceeded group size")
        orders.add(k)
    return frozenset(orders)
