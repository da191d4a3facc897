"""
Report rendering: plain text, JSON and Graphviz DOT
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import SemigroupToolkitError
from ..semigroup.cayley import CayleySemigroup
from ..semigroup.structure import StructureReport


@dataclass
class Report:
    """What a subcommand produced, ready for any of the output formats"""

    command: str
    payload: Dict[str, Any]
    text: List[str] = field(default_factory=list)
    dot: Optional[str] = None


def render(report: Report, output_format: str) -> str:
    if output_format == 'json':
        return json.dumps({'command': report.command, **report.payload}, indent=2) + "\n"
    if output_format == 'dot':
        if report.dot is None:
            raise ValueError(f"'{report.command}' has no DOT output")
        return report.dot
    return "\n".join(report.text) + "\n"


def error_envelope(exc: Exception) -> str:
    if isinstance(exc, SemigroupToolkitError):
        return exc.envelope()
    return f"error[cli]: {exc}"


# DOT

def _quote(label: str) -> str:
    return '"' + label.replace('\\', '\\\\').replace('"', '\\"') + '"'


def hasse_cluster(name: str, title: str, nodes: Sequence[str],
                  covers: Iterable[Tuple[str, str]]) -> List[str]:
    """A DOT cluster drawing each (lower, upper) cover as an upward arrow"""
    prefix = f"{name}_"
    out = [f"  subgraph cluster_{name} {{", f"    label={_quote(title)};"]
    for node in nodes:
        out.append(f"    {_quote(prefix + node)} [label={_quote(node)}];")
    for lower, upper in covers:
        out.append(f"    {_quote(prefix + lower)} -> {_quote(prefix + upper)};")
    out.append("  }")
    return out


def digraph(name: str, clusters: Sequence[List[str]]) -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for cluster in clusters:
        lines.extend(cluster)
    lines.append("}")
    return "\n".join(lines) + "\n"


def structure_dot(S: CayleySemigroup, report: StructureReport) -> str:
    """One cluster for the idempotent semilattice, one per nil poset"""
    sl = report.semilattice
    clusters = [hasse_cluster(
        "semilattice", "E(S)", [S.name(e) for e in sl.elements],
        [(S.name(sl.elements[lo]), S.name(sl.elements[hi])) for lo, hi in sl.covers])]
    for i, (e, poset) in enumerate(report.nil_posets.items()):
        label = lambda x: "0" if x == poset.zero else S.name(x)
        clusters.append(hasse_cluster(
            f"nil{i}", f"A_{S.name(e)} / K", [label(x) for x in poset.nodes],
            [(label(lo), label(hi)) for lo, hi in poset.covers]))
    return digraph("structure", clusters)


def semilattice_dot(name: str, nodes: Sequence[str], covers: Iterable[Tuple[str, str]]) -> str:
    return digraph(name, [hasse_cluster(name, name, nodes, covers)])


# Text helpers

def format_exponents(values: Iterable[int]) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def structure_text(S: CayleySemigroup, report: StructureReport) -> List[str]:
    sl = report.semilattice
    out = [f"elements: {S.size}", f"components: {len(report.components)}"]
    for e, members in report.components.items():
        out.append(f"  A_{S.name(e)}: {S.format_set(members)} (size {len(members)})")
    out.append("semilattice E(S): " + S.format_set(sl.elements))
    for lo, hi in sl.covers:
        out.append(f"  {S.name(sl.elements[lo])} < {S.name(sl.elements[hi])}")
    out.append("kernels:")
    for e, k in report.kernels.items():
        out.append(f"  K(A_{S.name(e)}) = {S.format_set(k)}  type {report.group_types[e]}")
    out.append("nil posets:")
    for e, poset in report.nil_posets.items():
        label = lambda x: "0" if x == poset.zero else S.name(x)
        if len(poset.nodes) == 1:
            out.append(f"  A_{S.name(e)}: trivial")
            continue
        covers = ", ".join(f"{label(lo)} < {label(hi)}" for lo, hi in poset.covers)
        out.append(f"  A_{S.name(e)}: {covers}")
    return out


def table_text(S: CayleySemigroup) -> List[str]:
    """The Cayley table with display names, aligned"""
    width = max(len(name) for name in S.names)
    head = " " * width + " | " + " ".join(name.rjust(width) for name in S.names)
    out = [head, "-" * len(head)]
    for i, row in enumerate(S.table.tolist()):
        out.append(S.name(i).rjust(width) + " | "
                   + " ".join(S.name(v).rjust(width) for v in row))
    return out
