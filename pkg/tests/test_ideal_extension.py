"""
Unit tests for ideal extensions of cyclic semigroups by cyclic semigroups
"""

from itertools import product

import pytest
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.algebra.ideal_extension import (Quintuple, classify, find_class_conflict, inner_ideal,
                                         is_realizable, is_strongly_realizable, outer_with_zero,
                                         realize, strong_extension, verify_quintuple_laws,
                                         violated_conditions)
from src.errors import NotRealizableError
from src.semigroup.cayley import is_ideal, is_semilattice, rees_quotient
from src.semigroup.isomorphism import is_isomorphic


def grid(bound):
    """Every quintuple with m, n, m', n' <= bound"""
    for m, n, mp, np_ in product(range(1, bound + 1), repeat=4):
        for k in range(mp + np_):
            yield Quintuple(m, n, mp, np_, k)


class TestQuintuple:
    """Test the quintuple type"""

    def test_k_range(self):
        """Test k in [0, m'+n'-1]"""
        Quintuple(3, 9, 13, 18, 30)
        with pytest.raises(ValueError):
            Quintuple(3, 9, 13, 18, 31)
        with pytest.raises(ValueError):
            Quintuple(3, 9, 13, 18, -1)

    def test_positive_parameters(self):
        """Test that m = 0 is rejected"""
        with pytest.raises(ValueError):
            Quintuple(0, 1, 1, 1, 0)

    def test_str(self):
        """Test the printed form"""
        assert str(Quintuple(3, 9, 13, 18, 4)) == "(3,9,13,18;4)"


class TestRealizability:
    """Test the realizability conditions"""

    def test_examples(self):
        """Test k = 4, 5, 6 over C(3,9) and C(13,18)"""
        assert is_realizable(Quintuple(3, 9, 13, 18, 4))
        assert not is_realizable(Quintuple(3, 9, 13, 18, 5))
        assert is_strongly_realizable(Quintuple(3, 9, 13, 18, 6))
        assert not is_strongly_realizable(Quintuple(3, 9, 13, 18, 4))

    def test_trivial(self):
        """Test that k = 0 is always realizable but never strong"""
        q = Quintuple(4, 2, 7, 5, 0)
        assert is_realizable(q)
        assert not is_strongly_realizable(q)
        assert violated_conditions(q) == []

    def test_violated_conditions_named(self):
        """Test that the failing condition is reported"""
        failed = violated_conditions(Quintuple(3, 9, 13, 18, 5))
        assert len(failed) == 1
        assert failed[0].startswith("R2")
        failed = violated_conditions(Quintuple(1, 1, 5, 1, 2))
        assert failed[0].startswith("R1")

    def test_zero_inner_period(self):
        """Test (m,n,m',1;m'-1) is strongly realizable for m >= 2"""
        for m in range(2, 6):
            for mp in range(2, 8):
                assert is_strongly_realizable(Quintuple(m, 3, mp, 1, mp - 1))

    def test_non_divisor_implies_strong(self):
        """Test realizable with m not dividing m'-1 implies strong"""
        for q in grid(6):
            if q.k >= 1 and is_realizable(q) and (q.m_prime - 1) % q.m:
                assert is_strongly_realizable(q), q


class TestRealize:
    """Test the realizing Cayley tables"""

    def test_strong_example(self):
        """Test the 41-element extension with k = 6"""
        ext = realize(Quintuple(3, 9, 13, 18, 6))
        assert ext.semigroup.size == 11 + 30
        assert verify_quintuple_laws(ext)

    def test_ordinary_example(self):
        """Test that k = 4 still gives a valid table"""
        ext = realize(Quintuple(3, 9, 13, 18, 4))
        assert verify_quintuple_laws(ext)
        S = ext.semigroup
        assert S.mul(ext.a, ext.b) == S.index("b^5")

    def test_not_realizable(self):
        """Test the witness for k = 5"""
        with pytest.raises(NotRealizableError) as info:
            realize(Quintuple(3, 9, 13, 18, 5))
        assert "R2" in str(info.value)
        assert "a^3 = a^12" in info.value.witness

    def test_zero_products(self):
        """Test that a^i * b^j collapses to the zero b^{m'} when n' = 1"""
        q = Quintuple(2, 3, 4, 1, 3)
        ext = realize(q)
        S = ext.semigroup
        zero = S.index("b^4")
        for i in range(4):
            for j in range(4, 8):
                assert S.mul(i, j) == zero

    def test_one_one(self):
        """Test that both k for C(1,1) by C(1,1) give the two-element semilattice"""
        for k in (0, 1):
            S = realize(Quintuple(1, 1, 1, 1, k)).semigroup
            assert S.size == 2
            assert is_semilattice(S)

    def test_realize_iff_realizable(self):
        """Test that the class product is well defined exactly when realizable"""
        for q in grid(6):
            assert (find_class_conflict(q) is None) == is_realizable(q), q

    def test_tables_valid(self):
        """Test table validation, laws and the Rees quotient on the small grid"""
        for q in grid(3):
            if not is_realizable(q):
                with pytest.raises(NotRealizableError):
                    realize(q)
                continue
            ext = realize(q)
            assert verify_quintuple_laws(ext), q
            ideal = inner_ideal(ext)
            assert is_ideal(ext.semigroup, ideal)
            assert is_isomorphic(rees_quotient(ext.semigroup, ideal), outer_with_zero(q)), q

    def test_matches_strong_semilattice(self):
        """Test that realize agrees with the two-node strong semilattice"""
        for q in grid(4):
            if is_strongly_realizable(q):
                ordinary = realize(q).semigroup
                strong = strong_extension(q).semigroup
                assert (ordinary.table == strong.table).all(), q
                assert ordinary.names == strong.names

    def test_strong_extension_rejects(self):
        """Test that k = 4 is not induced by a morphism"""
        with pytest.raises(NotRealizableError):
            strong_extension(Quintuple(3, 9, 13, 18, 4))


class TestClassify:
    """Test the classification table over all k"""

    def test_large_example(self):
        """Test realizable k are even k >= 4 and strong k are even k >= 6"""
        rows = classify(3, 9, 13, 18)
        assert [r.k for r in rows] == list(range(31))
        nontrivial = [r.k for r in rows if r.realizable and r.k > 0]
        assert nontrivial == list(range(4, 31, 2))
        assert [r.k for r in rows if r.strong] == list(range(6, 31, 2))
        assert rows[30].duplicate_of == 12

    def test_monoid_case(self):
        """Test that k = n' duplicates k = 0 when m' = 1"""
        rows = classify(2, 2, 1, 4)
        assert rows[4].duplicate_of == 0
        assert rows[4].trivial
        assert rows[0].trivial

    def test_one_one(self):
        """Test both k trivial over C(1,1)"""
        rows = classify(1, 1, 1, 1)
        assert [(r.k, r.realizable, r.trivial) for r in rows] == [(0, True, True), (1, True, True)]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
