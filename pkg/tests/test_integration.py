"""
Integration tests for end-to-end workflows
"""

import importlib.util
import json

import pytest
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.algebra.abelian import order_profile_of_group, order_statistics_type
from src.algebra.cyclic_hom import cyclic_decomposition, build_strong_semilattice, is_strong_decomposition
from src.algebra.ideal_extension import Quintuple, realize
from src.cli.formats import (format_table, parse_frame, parse_implications, parse_presentation,
                             parse_table, read_text)
from src.cli.main import main
from src.closure.implications import closure_cover, rfsl_from_base
from src.semigroup.cayley import from_presentation, subsemigroup_table, units
from src.semigroup.structure import structure_report
from src.semigroup.zn import unit_group_type, zn_semigroup
from src.words.free_words import format_word
from src.words.rewriting import complete, reduce, thue_oracle

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


class TestIntegration:
    """Test integrated workflows"""

    def setup_method(self):
        """Setup test fixtures"""
        path = os.path.join(DATA, "rf2.pres")
        self.rs = parse_presentation(read_text(path), path)
        self.completed = complete(self.rs)

    def test_presentation_to_table(self):
        """Test that Thue classes, normal forms and table elements agree"""
        S = from_presentation(self.completed)
        partition = thue_oracle(self.completed, 4)
        gens = self.completed.generators
        forms = {format_word(reduce(members[0], self.completed), gens)
                 for members in partition.classes}
        assert len(partition.classes) == S.size == 7
        assert forms == set(S.names)

    def test_table_file_keeps_structure(self):
        """Test that writing and re-reading a table keeps the structure report"""
        path = os.path.join(DATA, "rf1.pres")
        S = from_presentation(complete(parse_presentation(read_text(path), path)))
        T = parse_table(format_table(S))
        assert structure_report(T).as_dict(T) == structure_report(S).as_dict(S)

    def test_extension_structure(self):
        """Test the components of the strong k = 6 extension of C(13,18) by C(3,9)"""
        S = realize(Quintuple(3, 9, 13, 18, 6)).semigroup
        report = structure_report(S)
        assert sorted(len(c) for c in report.components.values()) == [11, 30]
        assert len(report.semilattice.elements) == 2
        assert sorted(t.invariant_factors for t in report.group_types.values()) == [(9,), (18,)]
        assert is_strong_decomposition(S, cyclic_decomposition(S)).is_strong

    def test_frame_file_round_trip(self):
        """Test that a built frame decomposes back into its exponent"""
        path = os.path.join(DATA, "chain.frame")
        S = build_strong_semilattice(parse_frame(read_text(path), path))
        check = is_strong_decomposition(S, cyclic_decomposition(S))
        assert check.is_strong
        assert list(check.exponents.values()) == [6]

    def test_unit_groups(self):
        """Test that the kernel of A_1, the order scan and the CRT type coincide"""
        for n in (20, 36, 63):
            S = zn_semigroup(n)
            G = subsemigroup_table(S, units(S))
            identity = G.index(S.name(1))
            scanned = order_statistics_type(order_profile_of_group(G, identity, range(G.size)))
            assert scanned == unit_group_type(n), n
            assert structure_report(S).group_types[1] == unit_group_type(n), n

    def test_closed_sets_and_semilattice(self):
        """Test that the relatively free semilattice has the non-empty closed sets"""
        for name in ("rf4.sl", "rf5.sl"):
            path = os.path.join(DATA, name)
            base = parse_implications(read_text(path), path)
            assert rfsl_from_base(base).semigroup.size == closure_cover(base).count - 1

    def test_cli_pipeline(self, capsys, tmp_path):
        """Test emitting an extension table and analysing the file"""
        table = tmp_path / "ext.tab"
        assert main(["extend", "3", "9", "13", "18", "--k", "6",
                     "--emit-table", str(table)]) == 0
        capsys.readouterr()
        assert main(["structure", str(table), "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["size"] == 41
        assert sorted(report["group_types"].values()) == [[9], [18]]
        assert report["properties"]["semilattice_of_groups"] is False

    def test_setup_lists_failing_modules(self, tmp_path, monkeypatch):
        """Test that the bootstrap runs every test module and reports the failing ones"""
        root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        spec = importlib.util.spec_from_file_location("bootstrap", os.path.join(root, "setup.py"))
        bootstrap = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(bootstrap)

        (tmp_path / "tests").mkdir()
        for name in ("test_a.py", "test_b.py", "helpers.py"):
            (tmp_path / "tests" / name).write_text("")
        calls = []

        def fake_main(args):
            calls.append(args[0])
            return 1 if args[0].endswith("test_b.py") else 0

        monkeypatch.chdir(tmp_path)
        monkeypatch.setattr(pytest, "main", fake_main)
        assert bootstrap.run_tests() == ["test_b.py"]
        assert [os.path.basename(c) for c in calls] == ["test_a.py", "test_b.py"]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
