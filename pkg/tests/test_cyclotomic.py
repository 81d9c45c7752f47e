import pytest
from hypothesis import given
from hypothesis import strategies as st

from dscodes.cyclotomic import CycInt, char_sum, cyc_add, cyc_mul, cyc_root_power, is_rational
from dscodes.errors import MixedPrimesError
from dscodes.gf import default_field


def test_integers_embed_in_the_canonical_basis():
    one = CycInt.integer(3, 1)
    assert one.coeffs == (-1, -1)  # 1 = -z - z^2 when 1 + z + z^2 = 0
    assert is_rational(one) == 1
    assert is_rational(CycInt.integer(5, -7)) == -7
    assert is_rational(CycInt.integer(3, 0)) == 0


def test_root_powers_and_vanishing_sum():
    z = cyc_root_power(3, 1)
    z2 = cyc_root_power(3, 2)
    assert is_rational(cyc_add(cyc_add(z, z2), CycInt.integer(3, 1))) == 0
    assert is_rational(cyc_mul(z, z2)) == 1  # z * z^2 = z^3 = 1
    assert cyc_root_power(3, 5) == z2  # exponents wrap mod p
    assert is_rational(z) is None


def test_char_two_roots_are_signs():
    assert is_rational(cyc_root_power(2, 0)) == 1
    assert is_rational(cyc_root_power(2, 1)) == -1
    assert is_rational(cyc_mul(cyc_root_power(2, 1), cyc_root_power(2, 1))) == 1


def test_mixed_primes_refuse_to_combine():
    with pytest.raises(MixedPrimesError):
        cyc_add(cyc_root_power(3, 1), cyc_root_power(5, 1))
    with pytest.raises(MixedPrimesError):
        cyc_mul(cyc_root_power(3, 1), cyc_root_power(5, 1))


def test_galois_permutes_exponents():
    z = cyc_root_power(5, 1)
    assert z.galois(2) == cyc_root_power(5, 2)
    assert z.galois(4).galois(4) == z  # sigma_4 is an involution on z
    orbit = z + z.galois(2) + z.galois(3) + z.galois(4)
    assert is_rational(orbit) == -1  # full orbit of a primitive root


@given(st.tuples(*[st.integers(-9, 9)] * 4), st.tuples(*[st.integers(-9, 9)] * 4))
def test_ring_axioms_p5(araw, braw):
    a = CycInt(5, araw)
    b = CycInt(5, braw)
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == CycInt.integer(5, 0)
    assert a * CycInt.integer(5, 1) == a
    c = cyc_root_power(5, 3)
    assert (a + b) * c == a * c + b * c


def test_integer_promotion_in_operators():
    z = cyc_root_power(3, 1)
    assert 1 + z == z + 1 == CycInt.integer(3, 1) + z
    assert 2 * z == z + z
    assert is_rational(z - z + 5) == 5


def test_char_sum_matches_scalar_summation():
    F = default_field(3, 2)
    S = [1, 3, 4, 7]
    for b in range(F.q):
        total = CycInt.integer(3, 0)
        for d in S:
            total = total + cyc_root_power(3, F.trace(F.mul(b, d)))
        assert char_sum(F, S, b) == total
    assert char_sum(F, S, 0) == CycInt.integer(3, len(S))


def test_gauss_sum_norm_is_the_field_size():
    # sum over x of z^Tr(x^2) has absolute norm q in GF(9) and GF(27)
    for p, m in ((3, 2), (3, 3)):
        F = default_field(p, m)
        g = CycInt.integer(p, 0)
        for x in range(F.q):
            g = g + cyc_root_power(p, F.trace(F.mul(x, x)))
        conj = g.galois(p - 1)
        assert is_rational(g * conj) == F.q


def test_from_counts_matches_sum_of_roots():
    counts = [4, 1, 2]  # 4 ones, 1 z, 2 z^2
    built = CycInt.from_counts(3, counts)
    manual = CycInt.integer(3, 4) + cyc_root_power(3, 1) + 2 * cyc_root_power(3, 2)
    assert built == manual


def test_str_lists_every_basis_coordinate():
    z = cyc_root_power(3, 1)
    s = str(z + z)
    assert "z^1" in s and "z^2" in s
