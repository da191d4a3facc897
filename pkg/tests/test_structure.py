"""
Unit tests for the structure report of finite commutative semigroups
"""

import random

import pytest
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.cli.formats import parse_presentation, read_text
from src.errors import NotIdempotentError
from src.semigroup.cayley import (CayleySemigroup, cyclic_semigroup, direct_product,
                                  from_presentation, is_group, j_classes, kernel,
                                  subsemigroup_table)
from src.semigroup.structure import (archimedean_components, component_kernel,
                                     component_partition, idempotent_semilattice,
                                     is_j_trivial, is_semilattice_of_groups, kernel_group_type,
                                     nil_poset, power_digraph_components, structure_report)
from src.semigroup.zn import zn_semigroup
from src.words.rewriting import complete

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


def load(name):
    """Cayley table of a presentation in data/"""
    path = os.path.join(DATA, name)
    return from_presentation(complete(parse_presentation(read_text(path), path)))


def named(S, elements):
    return {S.name(x) for x in elements}


class TestRF1:
    """Test the report of RFCS(a,b,c : a^2 = a, b^3 = ab^2, c^2 = bc)"""

    def setup_method(self):
        """Setup test fixtures"""
        self.S = load("rf1.pres")

    def test_size(self):
        """Test the eleven elements"""
        assert self.S.size == 11

    def test_components(self):
        """Test the three Archimedean components"""
        comps = archimedean_components(self.S)
        by_name = {self.S.name(e): named(self.S, c) for e, c in comps.items()}
        assert by_name == {
            "a": {"a"},
            "ab^2": {"b", "b^2", "ab", "ab^2"},
            "ab^2c": {"c", "bc", "b^2c", "ac", "abc", "ab^2c"},
        }

    def test_semilattice_is_chain(self):
        """Test ab^2c < ab^2 < a"""
        sl = idempotent_semilattice(self.S)
        covers = {(self.S.name(sl.elements[lo]), self.S.name(sl.elements[hi]))
                  for lo, hi in sl.covers}
        assert covers == {("ab^2", "a"), ("ab^2c", "ab^2")}

    def test_kernels_trivial(self):
        """Test that every component is nil"""
        report = structure_report(self.S)
        for e, k in report.kernels.items():
            assert k == {e}
            assert report.group_types[e].invariant_factors == ()

    def test_nil_poset_middle_component(self):
        """Test the poset of A_{ab^2}"""
        S = self.S
        poset = nil_poset(S, S.index("ab^2"))
        assert named(S, poset.upper_covers(poset.zero)) == {"b^2", "ab"}
        assert named(S, poset.upper_covers(S.index("b^2"))) == {"b"}
        assert poset.nodes[0] == poset.zero

    def test_report_dict(self):
        """Test the serialized report"""
        data = structure_report(self.S).as_dict(self.S)
        assert data["size"] == 11
        assert sorted(data["semilattice"]["elements"]) == ["a", "ab^2", "ab^2c"]
        assert data["group_types"]["a"] == []


class TestRF2:
    """Test the Archimedean semigroup RF_2"""

    def setup_method(self):
        """Setup test fixtures"""
        self.S = load("rf2.pres")

    def test_archimedean(self):
        """Test a single component"""
        assert len(archimedean_components(self.S)) == 1

    def test_kernel_type(self):
        """Test that the kernel is everything but b, of type C_6"""
        report = structure_report(self.S)
        (e,) = report.kernels
        assert named(self.S, report.kernels[e]) == {"a", "a^2", "ab", "b^2", "a^2b", "b^3"}
        assert report.group_types[e].invariant_factors == (6,)
        assert kernel(self.S) == report.kernels[e]


class TestZ18:
    """Test the report of (Z_18, *)"""

    def setup_method(self):
        """Setup test fixtures"""
        self.S = zn_semigroup(18)
        self.report = structure_report(self.S)

    def test_components(self):
        """Test the four components"""
        comps = {e: set(c) for e, c in self.report.components.items()}
        assert comps == {
            0: {0, 6, 12},
            1: {1, 5, 7, 11, 13, 17},
            9: {3, 9, 15},
            10: {2, 4, 8, 10, 14, 16},
        }

    def test_semilattice(self):
        """Test E(Z_18) and its covers"""
        sl = self.report.semilattice
        assert sl.elements == (0, 1, 9, 10)
        covers = {(sl.elements[lo], sl.elements[hi]) for lo, hi in sl.covers}
        assert covers == {(0, 9), (0, 10), (9, 1), (10, 1)}

    def test_group_components(self):
        """Test the two C_6 group components"""
        types = {e: t.invariant_factors for e, t in self.report.group_types.items()}
        assert types == {0: (), 1: (6,), 9: (), 10: (6,)}
        assert self.report.kernels[9] == {9}

    def test_nil_posets(self):
        """Test the two-element quotients of A_0 and A_9"""
        poset = self.report.nil_posets[9]
        assert set(poset.upper_covers(9)) == {3, 15}
        poset = self.report.nil_posets[0]
        assert set(poset.upper_covers(0)) == {6, 12}

    def test_not_semilattice_of_groups(self):
        """Test that A_0 and A_9 are not groups"""
        assert not is_semilattice_of_groups(self.S)


class TestNilPoset:
    """Test nil posets from the even residues of Z_16"""

    def setup_method(self):
        """Setup test fixtures"""
        self.S = zn_semigroup(16)
        self.poset = nil_poset(self.S, 0)

    def test_nodes(self):
        """Test that the even residues form the component of 0"""
        assert set(self.poset.nodes) == set(range(0, 16, 2))

    def test_proper_multiples(self):
        """Test PM(8) = {0}"""
        assert self.poset.proper_multiples[8] == {0}

    def test_upper_covers(self):
        """Test that 8 is covered by 4 and 12"""
        assert set(self.poset.upper_covers(8)) == {4, 12}

    def test_heights(self):
        """Test the layers 0 < 8 < {4, 12} < odd multiples of 2"""
        heights = self.poset.heights
        assert heights[0] == 0
        assert heights[8] == 1
        assert heights[4] == heights[12] == 2
        assert {heights[x] for x in (2, 6, 10, 14)} == {3}
        assert self.poset.nodes[:2] == (0, 8)

    def test_non_idempotent_rejected(self):
        """Test that the label must be idempotent"""
        with pytest.raises(NotIdempotentError):
            nil_poset(self.S, 2)
        with pytest.raises(NotIdempotentError):
            component_kernel(self.S, 2)


class TestStructureProperties:
    """Property checks over random products of cyclic semigroups"""

    def setup_method(self):
        """Setup test fixtures"""
        self.rng = random.Random(2024)

    def random_semigroup(self):
        factors = [cyclic_semigroup(self.rng.randint(1, 3), self.rng.randint(1, 4))
                   for _ in range(self.rng.randint(1, 3))]
        return direct_product(factors)

    def test_kernel_is_group(self):
        """Test that K(S) is a group for 200 random semigroups"""
        for _ in range(200):
            S = self.random_semigroup()
            assert is_group(subsemigroup_table(S, kernel(S)))

    def test_kernel_is_group_presentations_and_zn(self):
        """Test that K(S) is a group for the sample presentations and every Z_n up to 48"""
        samples = [load(name) for name in ("rf1.pres", "rf2.pres", "rf3.pres", "rf4.pres")]
        samples += [zn_semigroup(n) for n in range(2, 49)]
        for S in samples:
            K = kernel(S)
            assert is_group(subsemigroup_table(S, K))

    def test_power_digraph_matches(self):
        """Test the weak components of x -> x^k against the Archimedean partition"""
        for _ in range(50):
            S = self.random_semigroup()
            assert power_digraph_components(S) == component_partition(S)

    def test_component_multiplication(self):
        """Test that A_e * A_f lies in A_{ef}"""
        for _ in range(30):
            S = self.random_semigroup()
            comps = archimedean_components(S)
            for e, ce in comps.items():
                for f, cf in comps.items():
                    target = comps[S.mul(e, f)]
                    assert all(S.mul(x, y) in target for x in ce for y in cf)

    def test_component_kernels_are_groups(self):
        """Test that every K(A_e) is a group with identity e"""
        for _ in range(30):
            S = self.random_semigroup()
            for e in archimedean_components(S):
                K = component_kernel(S, e)
                assert e in K
                assert is_group(subsemigroup_table(S, K))
                assert kernel_group_type(S, e).order == len(K)

    def test_j_trivial_semilattice(self):
        """Test that a semilattice is J-trivial"""
        S = CayleySemigroup([[0, 0, 0], [0, 1, 0], [0, 0, 2]])
        assert is_j_trivial(S)
        assert is_semilattice_of_groups(S)

    def test_semilattice_of_groups_collapses_j(self):
        """Test that J equals the component partition for a semilattice of groups"""
        S = direct_product([cyclic_semigroup(1, 3), CayleySemigroup([[0, 0], [0, 1]])])
        assert is_semilattice_of_groups(S)
        assert j_classes(S) == component_partition(S)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
