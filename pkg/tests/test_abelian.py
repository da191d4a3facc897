"""
Unit tests for finite Abelian group typing and Smith Normal Form
"""

import random

import pytest
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from sympy import Matrix

from src.algebra.abelian import (AbelianType, abelian_types_of_order, count_abelian_groups,
                                 count_abelian_groups_of_order, incremental_p_group_type,
                                 order_profile_of_group, order_statistics_type, rfag_type,
                                 smith_normal_form, synthesize_order_profile, tmin_tmax,
                                 type_from_incremental, verify_smith_form)
from src.errors import InfiniteGroupError, NotAbelianProfileError
from src.semigroup.cayley import cyclic_semigroup, direct_product, subsemigroup_table, units
from src.semigroup.isomorphism import is_isomorphic
from src.semigroup.zn import units_zn, zn_semigroup

RF6 = [[60, -112, 94], [56, -108, 92], [84, -160, 136]]

# 2^15 * 3^7 * 5^5 * 7^3 * 11^2 split into eighteen prime-power factors
LARGE_GROUP = [2, 4, 4, 8, 8, 16, 3, 3, 3, 3, 27, 5, 25, 25, 7, 49, 11, 11]


class TestAbelianType:
    """Test the invariant-factor normal form"""

    def test_divisibility_chain_enforced(self):
        """Test that 4 | 6 fails"""
        with pytest.raises(ValueError):
            AbelianType((4, 6))
        with pytest.raises(ValueError):
            AbelianType((1, 2))

    def test_from_cyclic_factors(self):
        """Test C_5 x C_7 = C_35 and C_2 x C_4 x C_3 = C_2 x C_12"""
        assert AbelianType.from_cyclic_factors([5, 7]).invariant_factors == (35,)
        assert AbelianType.from_cyclic_factors([2, 4, 3]).invariant_factors == (2, 12)
        assert AbelianType.from_cyclic_factors([1]).invariant_factors == ()

    def test_str(self):
        """Test the printed form"""
        assert str(AbelianType((2, 12))) == "C_2 x C_12"
        assert str(AbelianType()) == "trivial"


class TestOrderStatistics:
    """Test typing from element orders"""

    def test_cyclic_p(self):
        """Test that C_p is recovered"""
        assert order_statistics_type({1: 1, 7: 6}).invariant_factors == (7,)

    def test_trivial(self):
        """Test the trivial group"""
        assert order_statistics_type([1]).invariant_factors == ()

    def test_large_p_group(self):
        """Test the layered 2-group with t = 8, 14, 19, 21, 22"""
        expected = AbelianType.from_cyclic_factors([32, 16, 8, 8, 8, 4, 2, 2])
        profile = synthesize_order_profile(expected)
        counts = [sum(c for o, c in profile.items() if 2 ** k % o == 0) for k in range(6)]
        assert counts == [1, 2 ** 8, 2 ** 14, 2 ** 19, 2 ** 21, 2 ** 22]
        assert order_statistics_type(profile) == expected
        assert incremental_p_group_type(2, counts) == [5, 4, 3, 3, 3, 2, 1, 1]

    def test_units_mod_49(self):
        """Test that the order scan of Z_49^inv gives C_42"""
        S = zn_semigroup(49)
        profile = order_profile_of_group(S, 1, sorted(units_zn(49)))
        assert order_statistics_type(profile).invariant_factors == (42,)

    def test_inconsistent_profile(self):
        """Test profiles that no Abelian group has"""
        with pytest.raises(NotAbelianProfileError):
            order_statistics_type({1: 1, 2: 2})
        with pytest.raises(NotAbelianProfileError):
            order_statistics_type({2: 1})
        # one element of order 2 but six of order 4
        with pytest.raises(NotAbelianProfileError):
            order_statistics_type({1: 1, 2: 1, 4: 6})

    def test_round_trip(self):
        """Test synthesize-then-type for every Abelian type of order up to 5000"""
        for order in range(1, 5001):
            for atype in abelian_types_of_order(order):
                profile = synthesize_order_profile(atype)
                assert sum(profile.values()) == order
                assert order_statistics_type(profile) == atype
                assert type_from_incremental(profile) == atype

    def test_realized_groups_match(self):
        """Test the reported type against an isomorphic product of cyclic groups"""
        for n in (15, 16, 20, 21, 24, 35):
            S = zn_semigroup(n)
            G = subsemigroup_table(S, units(S))
            identity = G.index(S.name(1))
            atype = order_statistics_type(order_profile_of_group(G, identity, range(G.size)))
            model = direct_product([cyclic_semigroup(1, f) for f in atype.invariant_factors])
            assert is_isomorphic(G, model), n


class TestSmithNormalForm:
    """Test exact Smith Normal Form"""

    def test_rf6(self):
        """Test diagonal (2, 4, 12) with unimodular transforms"""
        form = smith_normal_form(RF6)
        assert form.diagonal == (2, 4, 12)
        assert verify_smith_form(RF6, form)
        assert abs(Matrix(form.C).det()) == 1
        assert abs(Matrix(form.B).det()) == 1

    def test_zero_matrix(self):
        """Test that the zero matrix is left alone"""
        form = smith_normal_form([[0, 0], [0, 0]])
        assert form.D == ((0, 0), (0, 0))
        assert form.C == ((1, 0), (0, 1))
        assert form.B == ((1, 0), (0, 1))

    def test_identity(self):
        """Test the 3x3 identity"""
        eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert smith_normal_form(eye).diagonal == (1, 1, 1)

    def test_rectangular(self):
        """Test a 2x3 matrix whose 2x2 minors have gcd 12"""
        A = [[2, 4, 4], [-6, 6, 12]]
        form = smith_normal_form(A)
        assert verify_smith_form(A, form)
        assert form.diagonal == (2, 6)

    def test_random_matrices(self):
        """Test C*A*B = D and the divisibility chain on random input"""
        rng = random.Random(7)
        for _ in range(100):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            A = [[rng.randint(-30, 30) for _ in range(n)] for _ in range(m)]
            form = smith_normal_form(A)
            assert verify_smith_form(A, form)
            assert all(d >= 0 for d in form.diagonal)


class TestRfag:
    """Test relatively free Abelian groups"""

    def test_rf6(self):
        """Test C_2 x C_4 x C_12"""
        assert rfag_type(RF6).invariant_factors == (2, 4, 12)

    def test_diagonal(self):
        """Test diag(5, 7) gives C_35"""
        assert rfag_type([[5, 0], [0, 7]]).invariant_factors == (35,)

    def test_free_generator(self):
        """Test that no relations on one generator is infinite"""
        with pytest.raises(InfiniteGroupError) as info:
            rfag_type([], generators=1)
        assert info.value.free_rank == 1

    def test_rank_deficient(self):
        """Test that a dependent relation leaves a free factor"""
        with pytest.raises(InfiniteGroupError) as info:
            rfag_type([[2, 4], [1, 2]])
        assert info.value.free_rank == 1


class TestCounting:
    """Test t_min, t_max and group counts"""

    def test_large_group(self):
        """Test t_max = 18, t_min = 6 and the top two invariant factors"""
        table = tmin_tmax(AbelianType.from_cyclic_factors(LARGE_GROUP))
        assert table.t_max == 18
        assert table.t_min == 6
        assert table.invariant_factors[0] == 5821200
        assert table.invariant_factors[1] == 46200
        assert table.primes == (2, 3, 5, 7, 11)
        assert table.rows[0] == (16, 27, 25, 49, 11)

    def test_cyclic_30(self):
        """Test C_30 = C_2 x C_3 x C_5"""
        table = tmin_tmax(AbelianType((30,)))
        assert (table.t_min, table.t_max) == (1, 3)

    def test_trivial(self):
        """Test (0, 0) for the trivial group"""
        table = tmin_tmax(AbelianType())
        assert (table.t_min, table.t_max) == (0, 0)

    def test_partition_counts(self):
        """Test p(15) = 176, p(4) = 5, p(0) = 1 and p(100)"""
        assert count_abelian_groups_of_order(2, 15) == 176
        assert count_abelian_groups_of_order(5, 4) == 5
        assert count_abelian_groups_of_order(3, 0) == 1
        assert count_abelian_groups_of_order(7, 100) == 190569292
        with pytest.raises(ValueError):
            count_abelian_groups_of_order(4, 2)

    def test_count_matches_enumeration(self):
        """Test the product of partition counts against the listed types"""
        for order in (72, 360, 1024):
            assert count_abelian_groups(order) == len(abelian_types_of_order(order))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
