from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from dwinv.dw_invariant import (
    DyadicValue,
    HomElement,
    character_sum,
    character_sum_range,
    hirano_sum,
    hom_elements,
    invariant_fast,
    phi_character,
    product_indicator,
)
from dwinv.errors import DimensionError, InternalError, LimitError
from dwinv.graphs import is_even_graph
from dwinv.qr_graph import PrimeSet, build_qr_graph


def D(q):
    return DyadicValue.from_fraction(Fraction(q))


class TestDyadicValue:
    def test_canonical(self):
        assert DyadicValue(4, 0) == DyadicValue(1, 2)
        assert DyadicValue(4, 0).mantissa == 1
        assert DyadicValue(0, 5).exponent == 0
        assert DyadicValue(6, -2) == D(Fraction(3, 2))

    def test_str(self):
        assert str(DyadicValue(1, -1)) == "1/2"
        assert str(DyadicValue(1, 2)) == "4"
        assert str(DyadicValue(0)) == "0"
        assert str(DyadicValue(-3, -3)) == "-3/8"

    def test_arithmetic(self):
        half = DyadicValue(1, -1)
        assert half + half == 1
        assert half * 4 == 2
        assert (half + Fraction(1, 4)).to_fraction() == Fraction(3, 4)
        assert float(half) == 0.5

    def test_not_dyadic(self):
        with pytest.raises(ValueError):
            DyadicValue.from_fraction(Fraction(1, 3))

    @given(st.integers(-10**6, 10**6), st.integers(-40, 40))
    def test_fraction_round_trip(self, m, e):
        v = DyadicValue(m, e)
        assert D(v.to_fraction()) == v
        assert v.mantissa % 2 == 1 or v == DyadicValue(0)


class TestHomElement:
    def test_count_and_distinct(self):
        for r in range(1, 7):
            homs = hom_elements(r)
            assert len(homs) == 2 ** (r - 1)
            assert len(set(homs)) == len(homs)

    def test_rejects_unnormalised(self):
        with pytest.raises(ValueError):
            HomElement((1, 0, 1))

    def test_is_homomorphism_on_T(self):
        # rho(b_ij) computed from c agrees with rho applied to b_ij, and
        # b_ij = b_1i + b_1j makes the values on b_1j determine rho
        r = 5
        T = [x for x in product((0, 1), repeat=r) if sum(x) % 2 == 0]
        for rho in hom_elements(r):
            for x in T:
                for y in T:
                    xy = tuple(a ^ b for a, b in zip(x, y))
                    assert rho.on_vector(xy) == rho.on_vector(x) ^ rho.on_vector(y)
            for i in range(1, r + 1):
                for j in range(i + 1, r + 1):
                    b = tuple(int(k in (i, j)) for k in range(1, r + 1))
                    assert rho(i, j) == rho.on_vector(b)
                    if i > 1:
                        assert rho(i, j) == rho(1, i) ^ rho(1, j)

    def test_all_homs_distinct_on_T(self):
        # the 2^(r-1) parametrised maps are pairwise different functions on T
        r = 4
        T = [x for x in product((0, 1), repeat=r) if sum(x) % 2 == 0]
        tables = {tuple(rho.on_vector(x) for x in T) for rho in hom_elements(r)}
        assert len(tables) == 2 ** (r - 1)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            HomElement((0, 1)) + HomElement((0, 1, 1))


class TestPhiCharacter:
    def test_identity(self):
        for primes in [(5,), (5, 13), (5, 13, 17), (5, 29, 37, 73)]:
            assert phi_character(primes, HomElement((0,) * len(primes))) == 1

    def test_even_graph_trivial(self):
        s = PrimeSet([5, 29, 37, 73])
        assert all(phi_character(s, rho) == 1 for rho in hom_elements(4))

    def test_5_13_17(self):
        assert phi_character([5, 13, 17], HomElement((0, 1, 0))) == -1

    def test_dimension(self):
        with pytest.raises(DimensionError):
            phi_character([5, 13, 17], HomElement((0, 1)))

    def test_edge_exponent_identity(self, oracle_subsets):
        for subset in oracle_subsets[::7]:
            s = PrimeSet(subset)
            g = build_qr_graph(s)
            for rho in hom_elements(s.r):
                exponent = sum(rho(i, j) for i, j in g.edges)
                assert phi_character(s, rho) == (-1) ** exponent

    @given(st.data())
    def test_homomorphism(self, data):
        from dwinv.number_theory import primes_1_mod_4_up_to

        pool = primes_1_mod_4_up_to(400)
        primes = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=7, unique=True))
        r = len(primes)
        n1 = data.draw(st.integers(0, 2 ** (r - 1) - 1))
        n2 = data.draw(st.integers(0, 2 ** (r - 1) - 1))
        a, b = HomElement.from_index(r, n1), HomElement.from_index(r, n2)
        assert phi_character(primes, a + b) == phi_character(primes, a) * phi_character(primes, b)


@pytest.mark.parametrize(
    "primes, z",
    [
        ((5, 13, 37), 2),
        ((5, 13, 17, 41), 4),
        ((13,), Fraction(1, 2)),
        ((5, 29, 37, 73), 4),
        ((5, 13, 29, 61), 0),
        ((5,), Fraction(1, 2)),
        ((5, 13, 37, 113), 0),
        ((5, 17, 41, 53), 4),
        ((5, 29, 41, 89), 4),
    ],
)
def test_three_methods_on_examples(primes, z):
    assert hirano_sum(primes) == D(z)
    assert product_indicator(primes) == D(z)
    assert invariant_fast(primes) == D(z)


def test_hirano_single_prime_representation():
    z = hirano_sum([13])
    assert (z.mantissa, z.exponent) == (1, -1)


def test_brute_force_limit():
    with pytest.raises(LimitError):
        hirano_sum([5, 13, 17, 29], limit=3)
    big = [p for p in range(5, 2000, 4) if all(p % d for d in range(2, p))][:30]
    assert invariant_fast(big) in (DyadicValue(0), DyadicValue(1, 28))
    with pytest.raises(LimitError):
        hirano_sum(big)


def test_product_indicator_traps_bad_symbols():
    from dwinv.dw_invariant import indicator_product

    # not a valid symbol table: entries are 2, so the product is neither 0 nor 2^r
    with pytest.raises(InternalError):
        indicator_product([[1, 2], [2, 1]])


def test_character_sum_matches_direct_enumeration(oracle_subsets):
    for subset in oracle_subsets[::11]:
        s = PrimeSet(subset)
        direct = sum(phi_character(s, rho) for rho in hom_elements(s.r))
        assert character_sum(s.symbols) == direct


def test_character_sum_partition_is_exact():
    s = PrimeSet([5, 13, 17, 29, 37, 41, 53, 61, 73])
    n = 2 ** (s.r - 1)
    whole = character_sum_range(s.symbols, 0, n)
    for cuts in ([0, n], [0, 1, n], [0, 37, 100, 255, n]):
        parts = sum(character_sum_range(s.symbols, a, b) for a, b in zip(cuts, cuts[1:]))
        assert parts == whole


def test_character_sum_parallel_matches_sequential():
    s = PrimeSet([5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97])
    assert character_sum(s.symbols, workers=3) == character_sum(s.symbols)


def test_three_way_equivalence_and_orthogonality(oracle_subsets):
    assert len(oracle_subsets) == 6884
    for subset in oracle_subsets:
        s = PrimeSet(subset)
        z = hirano_sum(s)
        assert z == product_indicator(s) == invariant_fast(s)
        even = is_even_graph(build_qr_graph(s))
        assert z in (DyadicValue(0), DyadicValue(1, s.r - 2))
        assert (z != 0) == even
        total = character_sum(s.symbols)
        assert total == (2 ** (s.r - 1) if even else 0)
