"""
Unit tests for Cayley tables, congruences and isomorphism search
"""

import itertools
import random

import numpy as np
import pytest
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.errors import (InvalidCongruenceError, InvalidTableError, NoIdentityError,
                        NotAnIdealError, NotAssociativeError, NotCommutativeError)
from src.semigroup.cayley import (CayleySemigroup, CongruencePartition, adjoin_identity,
                                  adjoin_zero, cyclic_semigroup, cyclic_type, direct_product,
                                  idempotents, identity_of, is_archimedean, is_cancellative,
                                  is_group, is_ideal, is_nil, is_semilattice, is_zero_semigroup,
                                  j_classes, j_leq, j_poset, j_retract_search, kernel,
                                  minimal_idempotent, product_ids, quotient, rees_congruence,
                                  rees_quotient, smallest_congruence, subsemigroup_generated,
                                  subsemigroup_table, units, zero_of)
from src.semigroup.cyclic import CyclicType, cyclic_table
from src.semigroup.isomorphism import find_isomorphism, generating_set, is_isomorphic
from src.semigroup.zn import zn_semigroup


def random_semigroup(rng, max_factors=3):
    """Direct product of random cyclic semigroups"""
    factors = [cyclic_semigroup(rng.randint(1, 3), rng.randint(1, 4))
               for _ in range(rng.randint(1, max_factors))]
    return direct_product(factors)


class TestCyclicType:
    """Test C_{m,n} exponent arithmetic"""

    def test_canonical(self):
        """Test reduction of exponents into 1..m+n-1"""
        t = CyclicType(3, 4)
        assert t.order == 6
        assert [t.canonical(k) for k in (1, 2, 3, 6, 7, 10)] == [1, 2, 3, 6, 3, 6]

    def test_idempotent_exponent(self):
        """Test the unique multiple of n in the body"""
        assert CyclicType(3, 4).idempotent_exponent == 4
        assert CyclicType(5, 3).idempotent_exponent == 6
        assert CyclicType(1, 1).idempotent_exponent == 1

    def test_tail_and_body(self):
        """Test the split of exponents"""
        t = CyclicType(3, 2)
        assert t.tail == (1, 2)
        assert t.body == (3, 4)

    def test_invalid(self):
        """Test that m, n >= 1 is required"""
        with pytest.raises(ValueError):
            CyclicType(0, 2)

    def test_table_is_semigroup(self):
        """Test that every cyclic table is associative and commutative"""
        for m in range(1, 5):
            for n in range(1, 5):
                CayleySemigroup(cyclic_table(CyclicType(m, n)))


class TestCayleySemigroup:
    """Test table validation and element queries"""

    def setup_method(self):
        """Setup test fixtures"""
        self.z6 = zn_semigroup(6)
        self.c34 = cyclic_semigroup(3, 4)

    def test_not_commutative(self):
        """Test the commutativity witness"""
        with pytest.raises(NotCommutativeError) as info:
            CayleySemigroup([[0, 1], [0, 1]])
        assert info.value.witness == (0, 1)

    def test_not_associative(self):
        """Test the associativity check"""
        with pytest.raises(NotAssociativeError):
            CayleySemigroup([[1, 0], [0, 0]])

    def test_out_of_range(self):
        """Test that entries must be element ids"""
        with pytest.raises(InvalidTableError):
            CayleySemigroup([[0, 2], [2, 1]])

    def test_names(self):
        """Test display names"""
        assert self.c34.names[:3] == ("a", "a^2", "a^3")
        assert self.c34.index("a^2") == 1
        with pytest.raises(KeyError):
            self.c34.index("b")

    def test_table_read_only(self):
        """Test that the stored table cannot be modified"""
        with pytest.raises(ValueError):
            self.z6.table[0, 0] = 1

    def test_cyclic_type_of_generator(self):
        """Test index, period and power-idempotent"""
        data = cyclic_type(self.c34, 0)
        assert data.cyclic_type == CyclicType(3, 4)
        assert data.idempotent == 3
        assert data.order == 6

    def test_idempotents_zn(self):
        """Test E(Z_6)"""
        assert idempotents(self.z6) == {0, 1, 3, 4}

    def test_zero_and_identity(self):
        """Test neutral and absorbing elements"""
        assert zero_of(self.z6) == 0
        assert identity_of(self.z6) == 1
        assert zero_of(self.c34) is None
        assert identity_of(self.c34) is None

    def test_units(self):
        """Test the group of units"""
        assert units(self.z6) == {1, 5}
        with pytest.raises(NoIdentityError):
            units(self.c34)

    def test_kernel(self):
        """Test the kernel as e'S"""
        assert kernel(self.z6) == {0}
        assert kernel(self.c34) == {2, 3, 4, 5}
        assert minimal_idempotent(self.c34) == 3

    def test_kernel_is_least_ideal(self):
        """Test that the kernel is an ideal inside every principal ideal"""
        rng = random.Random(5)
        for _ in range(30):
            S = random_semigroup(rng)
            K = kernel(S)
            assert is_ideal(S, K)
            for x in range(S.size):
                principal = {x} | set(S.table[x, :].tolist())
                assert K <= principal

    def test_subsemigroup_generated(self):
        """Test closure under products"""
        assert subsemigroup_generated(self.z6, [2]) == {2, 4}
        assert subsemigroup_generated(self.z6, [2, 3]) == {0, 2, 3, 4}

    def test_subsemigroup_table(self):
        """Test restriction to a closed subset"""
        sub = subsemigroup_table(self.z6, [0, 3])
        assert sub.size == 2
        assert sub.names == ("0", "3")
        with pytest.raises(InvalidTableError):
            subsemigroup_table(self.z6, [2, 3])

    def test_predicates(self):
        """Test the structural predicates"""
        assert is_group(cyclic_semigroup(1, 5))
        assert is_nil(cyclic_semigroup(3, 1))
        assert not is_nil(adjoin_zero(cyclic_semigroup(3, 1)))
        assert is_archimedean(self.c34)
        assert not is_archimedean(self.z6)
        assert is_semilattice(CayleySemigroup([[0, 0], [0, 1]]))
        assert is_cancellative(cyclic_semigroup(1, 4))
        assert not is_cancellative(self.z6)
        assert is_zero_semigroup(CayleySemigroup([[0, 0], [0, 0]]))

    def test_adjoin_zero_and_identity(self):
        """Test S^0 and S^1"""
        s0 = adjoin_zero(self.c34)
        assert zero_of(s0) == 6
        s1 = adjoin_identity(self.c34)
        assert identity_of(s1) == 6
        assert s1.name(6) == "1"


class TestDirectProduct:
    """Test component-wise products"""

    def test_size_and_names(self):
        """Test mixed-radix ids and tuple names"""
        P = direct_product([zn_semigroup(2), zn_semigroup(3)])
        assert P.size == 6
        assert P.name(product_ids([zn_semigroup(2), zn_semigroup(3)], [1, 2])) == "(1,2)"

    def test_product_is_componentwise(self):
        """Test (x1, y1)(x2, y2) = (x1 x2, y1 y2)"""
        A, B = cyclic_semigroup(2, 2), zn_semigroup(4)
        P = direct_product([A, B])
        for x1 in range(A.size):
            for y1 in range(B.size):
                for x2 in range(A.size):
                    for y2 in range(B.size):
                        left = P.mul(product_ids([A, B], [x1, y1]), product_ids([A, B], [x2, y2]))
                        assert left == product_ids([A, B], [A.mul(x1, x2), B.mul(y1, y2)])

    def test_product_laws_hold(self):
        """Test that products pass full validation"""
        rng = random.Random(7)
        for _ in range(20):
            S = random_semigroup(rng)
            CayleySemigroup(S.table)

    def test_idempotents_of_product(self):
        """Test that E(S x T) = E(S) x E(T)"""
        A, B = zn_semigroup(6), cyclic_semigroup(2, 3)
        P = direct_product([A, B])
        expected = {product_ids([A, B], [e, f]) for e in idempotents(A) for f in idempotents(B)}
        assert idempotents(P) == expected

    def test_kernel_of_product(self):
        """Test that K(S x T) = K(S) x K(T)"""
        rng = random.Random(31)
        for _ in range(25):
            A = rng.choice([cyclic_semigroup(rng.randint(1, 4), rng.randint(1, 4)),
                            zn_semigroup(rng.randint(2, 12))])
            B = random_semigroup(rng, 2)
            P = direct_product([A, B])
            expected = {product_ids([A, B], [x, y]) for x in kernel(A) for y in kernel(B)}
            assert kernel(P) == expected

    def test_chinese_remainder_isomorphism(self):
        """Test Z_6 = Z_2 x Z_3"""
        P = direct_product([zn_semigroup(2), zn_semigroup(3)])
        f = find_isomorphism(zn_semigroup(6), P)
        assert f is not None
        assert sorted(f.tolist()) == list(range(6))


class TestIdealsAndCongruences:
    """Test Rees quotients and congruences"""

    def setup_method(self):
        """Setup test fixtures"""
        self.z6 = zn_semigroup(6)

    def test_is_ideal(self):
        """Test ideal membership"""
        assert is_ideal(self.z6, [0, 3])
        assert not is_ideal(self.z6, [3])

    def test_rees_quotient(self):
        """Test S/I with the ideal collapsed to 0"""
        Q = rees_quotient(self.z6, [0, 3])
        assert Q.size == 5
        assert Q.name(0) == "0"
        assert zero_of(Q) == 0

    def test_rees_quotient_rejects_non_ideal(self):
        """Test the witness of a failing ideal"""
        with pytest.raises(NotAnIdealError) as info:
            rees_quotient(self.z6, [2])
        assert info.value.witness[0] == 2

    def test_rees_congruence_matches_quotient(self):
        """Test that the Rees congruence gives the same size"""
        theta = rees_congruence(self.z6, [0, 3])
        assert theta.n_blocks == 5
        assert quotient(self.z6, theta).size == 5

    def test_smallest_congruence(self):
        """Test the congruence generated by 0 ~ 3"""
        theta = smallest_congruence(self.z6, [(0, 3)])
        assert theta.classes() == [(0, 3), (1,), (2,), (4,), (5,)]

    def test_smallest_congruence_spreads(self):
        """Test that 1 ~ 5 forces x ~ 5x"""
        theta = smallest_congruence(self.z6, [(1, 5)])
        assert theta.same_block(2, 4)
        assert not theta.same_block(0, 3)
        assert quotient(self.z6, theta).size == 4

    def test_invalid_congruence(self):
        """Test that an incompatible partition is rejected"""
        theta = CongruencePartition.from_labels([0, 1, 1, 3, 4, 5])
        with pytest.raises(InvalidCongruenceError):
            quotient(self.z6, theta)


class TestJRelation:
    """Test divisibility classes"""

    def setup_method(self):
        """Setup test fixtures"""
        self.z18 = zn_semigroup(18)

    def test_j_classes_z18(self):
        """Test that J-classes group elements by gcd with 18"""
        classes = j_classes(self.z18).classes()
        assert (3, 15) in classes
        assert (6, 12) in classes
        assert (1, 5, 7, 11, 13, 17) in classes
        assert len(classes) == 6

    def test_j_leq(self):
        """Test that 6 is a multiple of 3 but not conversely"""
        assert j_leq(self.z18, 6, 3)
        assert not j_leq(self.z18, 3, 6)

    def test_j_poset_minimum(self):
        """Test that the class of 0 is the least element"""
        poset = j_poset(self.z18)
        assert poset.classes[poset.minimum()] == (0,)

    def test_retract_z18(self):
        """Test the subsemigroup meeting every J-class once"""
        result = j_retract_search(self.z18)
        assert result.status == "found"
        assert result.representatives == {0, 1, 3, 9, 10, 12}

    def test_retract_z4(self):
        """Test the retract of Z_4"""
        result = j_retract_search(zn_semigroup(4))
        assert result.representatives == {0, 1, 2}

    def test_retract_budget(self):
        """Test that a tiny budget gives an unknown answer"""
        result = j_retract_search(self.z18, budget=1)
        assert result.status == "unknown"


class TestIsomorphism:
    """Test generating sets and isomorphism search"""

    def test_generating_set_cyclic(self):
        """Test that a cyclic semigroup needs one generator"""
        assert generating_set(cyclic_semigroup(3, 4)) == [0]

    def test_generating_set_generates(self):
        """Test that the greedy set generates"""
        S = zn_semigroup(12)
        assert subsemigroup_generated(S, generating_set(S)) == frozenset(range(12))

    def test_non_isomorphic_same_size(self):
        """Test C(2,2) against C(3,1)"""
        assert not is_isomorphic(cyclic_semigroup(2, 2), cyclic_semigroup(3, 1))

    def test_relabelled_copy(self):
        """Test that a permuted table is recognized"""
        rng = random.Random(11)
        S = random_semigroup(rng, 2)
        perm = np.array(rng.sample(range(S.size), S.size))
        inverse = np.argsort(perm)
        T = CayleySemigroup(perm[S.table[np.ix_(inverse, inverse)]])
        f = find_isomorphism(S, T)
        assert f is not None
        assert np.array_equal(f[S.table], T.table[np.ix_(f, f)])

    def test_three_element_nil_semigroups(self):
        """Test that every commutative nil semigroup of order 3 is null or C(3,1)"""
        cells = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
        representatives = []
        for values in itertools.product(range(3), repeat=len(cells)):
            table = np.zeros((3, 3), dtype=np.int64)
            for (i, j), v in zip(cells, values):
                table[i, j] = table[j, i] = v
            try:
                S = CayleySemigroup(table)
            except InvalidTableError:
                continue
            if not is_nil(S):
                continue
            if not any(is_isomorphic(S, R) for R in representatives):
                representatives.append(S)
        assert len(representatives) == 2
        assert sum(is_zero_semigroup(R) for R in representatives) == 1
        assert sum(is_isomorphic(R, cyclic_semigroup(3, 1)) for R in representatives) == 1


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
