"""
Input and output file formats

Every format is UTF-8 and line oriented; `#` starts a comment and blank lines
are ignored. Parsers take the file text and the path it came from so that
errors point at a line.
"""

import logging
import re
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..closure.implications import Implication, ImplicationBase
from ..errors import ParseError, SemigroupToolkitError
from ..semigroup.cayley import CayleySemigroup
from ..semigroup.cyclic import CyclicType
from ..algebra.cyclic_hom import Frame, FrameEdge
from ..words.free_words import parse_word
from ..words.rewriting import RuleSystem, orient

log = logging.getLogger(__name__)

Line = Tuple[int, str]


def read_text(path: str) -> str:
    """File contents; OSError propagates to the caller"""
    return Path(path).read_text(encoding="utf-8")


def _lines(text: str) -> Iterator[Line]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield number, line


def _keyword(line: str) -> Tuple[Optional[str], str]:
    match = re.match(r'([A-Za-z_]+)\s*:(.*)$', line)
    if not match:
        return None, line
    return match.group(1).lower(), match.group(2).strip()


def _ints(text: str, path: str, number: int) -> List[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise ParseError(f"expected integers, got '{text}'", path, number) from None


# Presentations

def parse_presentation(text: str, path: str = "<input>") -> RuleSystem:
    """
    `gens: a b c` followed by `rel: u = v` lines

    Relations are oriented by the military order; `->` is accepted in place of
    `=` for relations that are already oriented.
    """
    generators: Optional[Tuple[str, ...]] = None
    relations = []
    for number, line in _lines(text):
        key, body = _keyword(line)
        if key == 'gens':
            if generators is not None:
                raise ParseError("second 'gens:' line", path, number)
            generators = tuple(body.split())
            if not generators:
                raise ParseError("'gens:' lists no generators", path, number)
        elif key == 'rel':
            if generators is None:
                raise ParseError("'rel:' before 'gens:'", path, number)
            sides = re.split(r'->|=', body)
            if len(sides) != 2:
                raise ParseError(f"relation needs exactly one '=' or '->': '{body}'", path, number)
            try:
                relations.append(tuple(parse_word(side, generators) for side in sides))
            except (ValueError, SemigroupToolkitError) as exc:
                raise ParseError(str(exc), path, number) from None
        else:
            raise ParseError(f"unexpected line '{line}'", path, number)
    if generators is None:
        raise ParseError("missing 'gens:' line", path)
    log.debug("%s: %d generators, %d relations", path, len(generators), len(relations))
    return orient(relations, generators)


# Cayley tables

def parse_table(text: str, path: str = "<input>") -> CayleySemigroup:
    """
    Line 1 `n`, then n rows of n ids in 0..n-1, then an optional `names:` line
    """
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty table file", path)
    number, header = lines[0]
    size = _ints(header, path, number)
    if len(size) != 1 or size[0] < 1:
        raise ParseError("first line must be the table size n >= 1", path, number)
    n = size[0]
    rows: List[List[int]] = []
    names: Optional[List[str]] = None
    for number, line in lines[1:]:
        key, body = _keyword(line)
        if key == 'names':
            names = body.split()
            if len(names) != n:
                raise ParseError(f"expected {n} names, got {len(names)}", path, number)
            continue
        if len(rows) == n:
            raise ParseError("more than n rows", path, number)
        row = _ints(line, path, number)
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", path, number)
        rows.append(row)
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, got {len(rows)}", path)
    return CayleySemigroup(rows, names)


def format_table(S: CayleySemigroup) -> str:
    """Inverse of parse_table"""
    width = len(str(S.size - 1))
    out = [str(S.size)]
    for row in S.table.tolist():
        out.append(" ".join(str(v).rjust(width) for v in row))
    out.append("names: " + " ".join(name.replace(' ', '') for name in S.names))
    return "\n".join(out) + "\n"


def write_table(S: CayleySemigroup, path: str):
    Path(path).write_text(format_table(S), encoding="utf-8")
    log.info("wrote %d-element table to %s", S.size, path)


# Integer matrices

def parse_matrix(text: str, path: str = "<input>") -> Tuple[List[List[int]], int]:
    """`m n` header and m rows of n integers; returns (rows, n)"""
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty matrix file", path)
    number, header = lines[0]
    dims = _ints(header, path, number)
    if len(dims) != 2 or dims[0] < 0 or dims[1] < 1:
        raise ParseError("header must be 'm n' with m >= 0 and n >= 1", path, number)
    m, n = dims
    rows = []
    for number, line in lines[1:]:
        row = _ints(line, path, number)
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", path, number)
        rows.append(row)
    if len(rows) != m:
        raise ParseError(f"expected {m} rows, got {len(rows)}", path)
    return rows, n


# Frames

_EDGE = re.compile(r'^(\S+)\s*>\s*(\S+)(?:\s+k\s*=\s*(-?\d+))?$')


def parse_frame(text: str, path: str = "<input>") -> Frame:
    """`type: NAME m n` lines and `edge: UPPER > LOWER [k=K]` lines"""
    types: Dict[str, CyclicType] = {}
    edges: List[FrameEdge] = []
    for number, line in _lines(text):
        key, body = _keyword(line)
        if key == 'type':
            parts = body.split()
            if len(parts) != 3:
                raise ParseError("type line needs 'NAME m n'", path, number)
            name = parts[0]
            if name in types:
                raise ParseError(f"node {name!r} declared twice", path, number)
            m, n = _ints(" ".join(parts[1:]), path, number)
            try:
                types[name] = CyclicType(m, n)
            except ValueError as exc:
                raise ParseError(str(exc), path, number) from None
        elif key == 'edge':
            match = _EDGE.match(body)
            if not match:
                raise ParseError(f"edge must read 'A > B [k=K]', got '{body}'", path, number)
            upper, lower, k = match.groups()
            for node in (upper, lower):
                if node not in types:
                    raise ParseError(f"edge mentions undeclared node {node!r}", path, number)
            edges.append(FrameEdge(upper, lower, None if k is None else int(k)))
        else:
            raise ParseError(f"unexpected line '{line}'", path, number)
    if not types:
        raise ParseError("frame declares no nodes", path)
    return Frame(types, edges)


# Implications and join relations

def _terms(text: str, path: str, number: int, known: Sequence[str]) -> frozenset:
    members = frozenset(re.split(r'[\s|,]+', text.strip())) - {''}
    if not members:
        raise ParseError("empty side", path, number)
    unknown = members - set(known)
    if unknown:
        raise ParseError(f"unknown elements {sorted(unknown)}", path, number)
    return members


def parse_implications(text: str, path: str = "<input>") -> ImplicationBase:
    """
    `base: a b c d e`, then `imp: b c -> e` and/or `rel: b | c = a | b` lines

    A join relation u = v contributes the two implications supp(u) -> supp(v)
    and supp(v) -> supp(u).
    """
    ground: Optional[Tuple[str, ...]] = None
    implications: List[Implication] = []
    for number, line in _lines(text):
        key, body = _keyword(line)
        if key == 'base':
            if ground is not None:
                raise ParseError("second 'base:' line", path, number)
            ground = tuple(body.split())
            if not ground or len(set(ground)) != len(ground):
                raise ParseError("'base:' needs distinct element names", path, number)
        elif key in ('imp', 'rel'):
            if ground is None:
                raise ParseError(f"'{key}:' before 'base:'", path, number)
            arrow = '->' if key == 'imp' else '='
            sides = body.split(arrow)
            if len(sides) != 2:
                raise ParseError(f"expected exactly one '{arrow}'", path, number)
            left, right = (_terms(side, path, number, ground) for side in sides)
            implications.append(Implication(left, right))
            if key == 'rel':
                implications.append(Implication(right, left))
        else:
            raise ParseError(f"unexpected line '{line}'", path, number)
    if ground is None:
        raise ParseError("missing 'base:' line", path)
    return ImplicationBase(ground, tuple(implications))
