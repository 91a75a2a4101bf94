import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from isospec.arith import factorize, largest_primitive_divisor, prime_powers
from isospec.spectra import (
    BOUND_FAMILIES,
    CLASSICAL_FAMILIES,
    Family,
    GroupId,
    SpectrumBasis,
    UnsupportedFamily,
    bruteforce_omega_psl2,
    contains,
    exponent,
    exponent_lower_bound,
    exponent_prime_to_v,
    mu,
    omega_basis,
    pi,
    v_exponent_floor,
)

F = Family
odd_q = st.sampled_from(prime_powers(5, 200, odd=True))


def closure(b: SpectrumBasis):
    return {d for d in range(1, b.lcm() + 1) if d in b}


class TestGroupId:
    def test_names(self):
        assert str(GroupId(F.S6, 5)) == "S6(5)"
        assert str(GroupId(F.Sz, 8)) == "2B2(8)"
        assert str(GroupId(F.LinearN, 3, 4)) == "L4(3)"
        assert str(GroupId(F.E6, 2, sign=-1)) == "2E6(2)"
        assert str(GroupId(F.OrthMinusN, 3, 5)) == "O10-(3)"

    def test_derived_fields(self):
        g = GroupId(F.O7, 27)
        assert g.char == 3 and g.eps == -1
        assert GroupId(F.S6, 13).eps == 1
        assert GroupId(F.UnitaryN, 3, 4).tau == -1

    @pytest.mark.parametrize(
        "args",
        [
            (F.S6, 6),
            (F.S6, 4),
            (F.Sz, 4),
            (F.Sz, 2),
            (F.Ree, 9),
            (F.TwistedF4, 16),
            (F.LinearN, 3, 2),
            (F.OrthPlusN, 3, 3),
            (F.SymplecticN, 3),
            (F.G2, 3, 2),
            (F.PSL2, 3),
        ],
    )
    def test_invalid(self, args):
        with pytest.raises(ValueError):
            GroupId(*args)

    def test_sign_normalised(self):
        assert GroupId(F.G2, 5, sign=-1).sign == 1
        assert GroupId(F.UnitaryN, 2, 3).sign == -1
        with pytest.raises(ValueError):
            GroupId(F.E6, 2, sign=0)


class TestSpectrumBasis:
    def test_normalisation(self):
        b = SpectrumBasis.from_numbers([24, 120, 6, 25, 5])
        assert b.generators == {120, 25}
        assert 40 in b and 7 not in b and 1 in b

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            SpectrumBasis.from_numbers([0, 3])

    def test_subset(self):
        small = SpectrumBasis.from_numbers([6, 4])
        assert small.issubset(SpectrumBasis.from_numbers([12]))
        assert not small.issubset(SpectrumBasis.from_numbers([6]))


class TestOmega:
    def test_s6_5(self):
        b = omega_basis(GroupId(F.S6, 5))
        assert b.generators == {63, 62, 78, 52, 130, 120, 25}
        assert pi(GroupId(F.S6, 5)) == {2, 3, 5, 7, 13, 31}
        assert not contains(b, 91) and contains(b, 39) and contains(b, 1)

    def test_small_families(self):
        assert mu(GroupId(F.Sz, 8)) == {4, 5, 7, 13}
        assert pi(GroupId(F.Sz, 8)) == {2, 5, 7, 13}
        assert mu(GroupId(F.Ree, 27)) == {9, 6, 14, 26, 37, 19}
        assert mu(GroupId(F.PSL2, 7)) == {7, 3, 4}
        assert mu(GroupId(F.PSL2, 4)) == {2, 3, 5}
        assert pi(GroupId(F.G2, 3)) == {2, 3, 7, 13}

    def test_o8_contains_o7(self):
        for q in (5, 7, 9, 11):
            o7, o8 = omega_basis(GroupId(F.O7, q)), omega_basis(GroupId(F.O8Plus, q))
            assert o7.issubset(o8)
            assert (q**4 - 1) // 4 in o8

    def test_unsupported(self):
        with pytest.raises(UnsupportedFamily):
            omega_basis(GroupId(F.E8, 2))
        with pytest.raises(UnsupportedFamily):
            mu(GroupId(F.LinearN, 3, 4))

    @given(odd_q, st.sampled_from([F.S6, F.O7, F.O8Plus]))
    def test_generators_incomparable(self, q, fam):
        gens = sorted(mu(GroupId(fam, q)))
        for i, a in enumerate(gens):
            assert all(b % a for b in gens[i + 1 :])

    @given(odd_q, st.sampled_from([F.S6, F.O7, F.O8Plus]))
    def test_k6_nonadjacent_to_2(self, q, fam):
        eps = 1 if q % 4 == 1 else -1
        k = largest_primitive_divisor(6, eps * q)
        b = omega_basis(GroupId(fam, q))
        assert contains(b, k) and not contains(b, 2 * k)

    @given(odd_q)
    def test_pi_is_order_primes(self, q):
        # |S6(q)| = q^9 (q^2-1)(q^4-1)(q^6-1) / 2
        p = factorize(q).primes[0]
        order_primes = {p} | set(factorize((q**2 - 1) * (q**4 - 1) * (q**6 - 1)).primes)
        assert pi(GroupId(F.S6, q)) == order_primes


class TestPSL2Oracle:
    @pytest.mark.parametrize("u", [4, 5, 7, 8, 9, 11, 13])
    def test_formula_matches_enumeration(self, u):
        assert closure(omega_basis(GroupId(F.PSL2, u))) == bruteforce_omega_psl2(u)

    def test_examples(self):
        assert bruteforce_omega_psl2(7) == {1, 2, 3, 4, 7}
        assert bruteforce_omega_psl2(9) == {1, 2, 3, 4, 5}
        assert bruteforce_omega_psl2(5) == {1, 2, 3, 5}

    def test_cost_guard(self):
        with pytest.raises(ValueError):
            bruteforce_omega_psl2(16)
        with pytest.raises(ValueError):
            bruteforce_omega_psl2(6)


class TestExponent:
    def test_examples(self):
        assert exponent(GroupId(F.S6, 5)) == 5077800
        assert exponent(GroupId(F.S6, 7)) == 20588400
        assert exponent(GroupId(F.O7, 9)) == 196101360
        assert exponent(GroupId(F.TwistedF4, 8)) == 16 * (8**6 + 1) * (8**3 + 1) * 7 // 3

    @pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 25, 27])
    @pytest.mark.parametrize("fam", [F.S6, F.O7, F.O8Plus])
    def test_closed_form_is_lcm(self, q, fam):
        g = GroupId(fam, q)
        assert exponent(g) == omega_basis(g).lcm()

    def test_unsupported(self):
        with pytest.raises(UnsupportedFamily):
            exponent(GroupId(F.SymplecticN, 3, 3))
        with pytest.raises(UnsupportedFamily):
            exponent_prime_to_v(GroupId(F.G2, 5))

    def test_prime_to_v_examples(self):
        e7 = (2**12 + 2**6 + 1) * (2**14 - 1) * (2**10 - 1) * (2**12 - 1) * (2**4 + 1) // 27
        assert exponent_prime_to_v(GroupId(F.E7, 2)) == e7
        assert exponent_prime_to_v(GroupId(F.SymplecticN, 3, 3)) == 8 * 10 * 91 // 2
        assert exponent_prime_to_v(GroupId(F.LinearN, 3, 4)) == 2 * 4 * 13 * 10 // 2
        assert exponent_prime_to_v(GroupId(F.OrthOddN, 3, 3)) == 3640

    @pytest.mark.parametrize("u", [2, 3, 4, 5, 7])
    @pytest.mark.parametrize("fam", [F.E6, F.E7, F.E8])
    def test_e_series_prime_to_v_is_coprime(self, u, fam):
        for sign in (1, -1) if fam is F.E6 else (1,):
            g = GroupId(fam, u, sign=sign)
            e = exponent_prime_to_v(g)
            assert math.gcd(e, g.char) == 1
            assert exponent(g) % e == 0

    def test_lower_bound_examples(self):
        assert exponent_lower_bound(GroupId(F.E8, 2)) == 2 * 2**80
        assert exponent_lower_bound(GroupId(F.E7, 2)) == 3 * 2**48
        assert exponent_lower_bound(GroupId(F.SymplecticN, 3, 5)) == 5 * 3**15 // 2

    @pytest.mark.parametrize("fam", sorted(CLASSICAL_FAMILIES, key=lambda f: f.value))
    def test_lower_bound_below_exponent(self, fam):
        # exp(S) >= exp_v' * exp_v and exp_v is at least the documented floor
        for u in (2, 3, 4, 5, 7, 8, 9):
            for n in range(2, 9):
                try:
                    g = GroupId(fam, u, n)
                except ValueError:
                    continue
                assert exponent_lower_bound(g) < exponent_prime_to_v(g) * v_exponent_floor(g)

    @pytest.mark.parametrize("fam", [F.E6, F.E7, F.E8, F.TwistedF4])
    def test_lower_bound_below_exceptional_exponent(self, fam):
        for u in prime_powers(2, 32):
            for sign in (1, -1):
                try:
                    g = GroupId(fam, u, sign=sign)
                except ValueError:
                    continue
                assert exponent_lower_bound(g) < exponent(g)

    def test_bound_families_covered(self):
        for fam in BOUND_FAMILIES:
            n = 4 if fam in CLASSICAL_FAMILIES else None
            q = 8 if fam is F.TwistedF4 else 3
            assert exponent_lower_bound(GroupId(fam, q, n)) > 0
