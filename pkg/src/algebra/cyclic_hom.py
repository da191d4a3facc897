"""
Morphisms Between Cyclic Semigroups
Exponent sets of morphisms a -> b^k, composition along semilattice frames and strong semilattices
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..errors import (InvalidDecompositionError, InvalidExponentError, NotASemilatticeError,
                      PathDisagreementError, TypeMismatchError)
from ..semigroup.cayley import CayleySemigroup, cyclic_type, idempotents
from ..semigroup.cyclic import CyclicType

log = logging.getLogger(__name__)


def is_morphism_exponent(src: CyclicType, dst: CyclicType, k: int) -> bool:
    """a -> b^k extends to a morphism C_{m,n} -> C_{m',n'} iff m' <= km and n' | kn"""
    if k < 1:
        raise ValueError("morphism exponents start at 1")
    return dst.m <= k * src.m and (k * src.n) % dst.n == 0


def canonical_exponent(k: int, target: CyclicType) -> int:
    return target.canonical(k)


def idempotent_exponent(t: CyclicType) -> int:
    return t.idempotent_exponent


@dataclass(frozen=True)
class ExqSet:
    """All canonical exponents k for which a -> b^k is a morphism"""

    source: CyclicType
    target: CyclicType
    exponents: Tuple[int, ...]

    def __contains__(self, k: int) -> bool:
        return self.target.canonical(k) in self.exponents

    def __len__(self) -> int:
        return len(self.exponents)


def exq(src: CyclicType, dst: CyclicType) -> ExqSet:
    """Valid exponents in the window [1, m'+n'-1]; every valid k reduces into it"""
    valid = tuple(k for k in range(1, dst.order + 1) if is_morphism_exponent(src, dst, k))
    return ExqSet(source=src, target=dst, exponents=valid)


def compose_exq(ab: ExqSet, bd: ExqSet) -> ExqSet:
    """Canonical exponents of all composites g o f"""
    if ab.target != bd.source:
        raise TypeMismatchError(f"cannot compose through {ab.target} and {bd.source}",
                                witness=(str(ab.target), str(bd.source)))
    target = bd.target
    exps = sorted({target.canonical(k1 * k2) for k1 in ab.exponents for k2 in bd.exponents})
    return ExqSet(source=ab.source, target=target, exponents=tuple(exps))


def power_map_table(src: CyclicType, dst: CyclicType, k: int) -> np.ndarray:
    """Image exponent of a^i under a -> b^k for i = 1..m+n-1 (index i-1)"""
    return np.array([dst.canonical(i * k) for i in range(1, src.order + 1)], dtype=np.int64)


@dataclass(frozen=True)
class FrameEdge:
    upper: str
    lower: str
    k: Optional[int] = None


class Frame:
    """
    Finite meet-semilattice of nodes, each carrying a cyclic type

    Edges point from a node to a node below it and may carry the exponent of
    the structure morphism between the two cyclic semigroups.
    """

    def __init__(self, types: Mapping[str, CyclicType], edges: Sequence[FrameEdge] = ()):
        self.types: Dict[str, CyclicType] = dict(types)
        self.nodes: Tuple[str, ...] = tuple(self.types)
        if not self.nodes:
            raise NotASemilatticeError("a frame needs at least one node")
        self.edges: Tuple[FrameEdge, ...] = tuple(edges)
        self._index = {name: i for i, name in enumerate(self.nodes)}

        r = len(self.nodes)
        leq = np.eye(r, dtype=bool)
        for edge in self.edges:
            for name in (edge.upper, edge.lower):
                if name not in self._index:
                    raise NotASemilatticeError(f"edge mentions unknown node {name!r}")
            if edge.upper == edge.lower:
                raise NotASemilatticeError(f"loop at {edge.upper}")
            leq[self._index[edge.lower], self._index[edge.upper]] = True
        for mid in range(r):
            leq |= leq[:, mid:mid + 1] & leq[mid:mid + 1, :]
        cycle = np.argwhere(leq & leq.T & ~np.eye(r, dtype=bool))
        if len(cycle):
            a, b = (self.nodes[int(v)] for v in cycle[0])
            raise NotASemilatticeError("edges contain a cycle", witness=(a, b))
        self._leq = leq
        self._meet = self._meet_table()

        for edge in self.edges:
            if edge.k is not None:
                src, dst = self.types[edge.upper], self.types[edge.lower]
                if not is_morphism_exponent(src, dst, edge.k):
                    raise InvalidExponentError(
                        f"k={edge.k} gives no morphism {edge.upper} {src} -> {edge.lower} {dst}",
                        witness=(edge.upper, edge.lower, edge.k))

    def _meet_table(self) -> List[List[int]]:
        r = len(self.nodes)
        table = [[0] * r for _ in range(r)]
        for a in range(r):
            for b in range(r):
                lower = np.flatnonzero(self._leq[:, a] & self._leq[:, b])
                greatest = [x for x in lower if all(self._leq[y, x] for y in lower)]
                if not greatest:
                    raise NotASemilatticeError(
                        f"{self.nodes[a]} and {self.nodes[b]} have no meet",
                        witness=(self.nodes[a], self.nodes[b]))
                table[a][b] = int(greatest[0])
        return table

    def leq(self, a: str, b: str) -> bool:
        return bool(self._leq[self._index[a], self._index[b]])

    def meet(self, a: str, b: str) -> str:
        return self.nodes[self._meet[self._index[a]][self._index[b]]]

    def down_set(self, a: str) -> List[str]:
        return [x for x in self.nodes if self.leq(x, a)]

    def composites(self) -> Dict[Tuple[str, str], int]:
        """
        sigma exponents for every comparable pair, composed along all paths

        Raises:
            PathDisagreementError: two paths between the same nodes compose differently
        """
        if any(edge.k is None for edge in self.edges):
            raise InvalidExponentError("every edge needs an exponent k to compose morphisms")
        comp: Dict[Tuple[str, str], int] = {}
        for alpha in sorted(self.nodes, key=lambda v: len(self.down_set(v))):
            comp[(alpha, alpha)] = 1
            for edge in (e for e in self.edges if e.upper == alpha):
                beta = edge.lower
                for gamma in self.down_set(beta):
                    candidate = self.types[gamma].canonical(edge.k * comp[(beta, gamma)])
                    known = comp.get((alpha, gamma))
                    if known is not None and known != candidate:
                        raise PathDisagreementError(
                            f"paths from {alpha} to {gamma} compose to k={known} and k={candidate}",
                            witness=(alpha, gamma, known, candidate))
                    comp[(alpha, gamma)] = candidate
        return comp


def build_strong_semilattice(frame: Frame) -> CayleySemigroup:
    """
    Strong semilattice of the frame's cyclic semigroups

    x in A_alpha and y in A_beta multiply inside A_{alpha ^ beta} after both
    are pushed down by their structure morphisms.
    """
    comp = frame.composites()
    elements = [(node, i) for node in frame.nodes for i in range(1, frame.types[node].order + 1)]
    ids = {el: pos for pos, el in enumerate(elements)}
    n = len(elements)
    table = np.zeros((n, n), dtype=np.int64)
    for (alpha, i), x in ids.items():
        for (beta, j), y in ids.items():
            delta = frame.meet(alpha, beta)
            exponent = i * comp[(alpha, delta)] + j * comp[(beta, delta)]
            table[x, y] = ids[(delta, frame.types[delta].canonical(exponent))]
    names = [node if i == 1 else f"{node}^{i}" for node, i in elements]
    log.info("strong semilattice over %d nodes: %d elements", len(frame.nodes), n)
    return CayleySemigroup(table, names)


@dataclass(frozen=True)
class StrongSemilatticeCount:
    intersection: Tuple[int, ...]
    left_counts: Dict[int, int]
    right_counts: Dict[int, int]
    ss: int


def _diamond(frame: Frame) -> Tuple[str, str, str, str]:
    if len(frame.nodes) != 4:
        raise NotASemilatticeError("counting needs a 4-node diamond frame")
    tops = [v for v in frame.nodes if all(frame.leq(x, v) for x in frame.nodes)]
    bottoms = [v for v in frame.nodes if all(frame.leq(v, x) for x in frame.nodes)]
    middle = [v for v in frame.nodes if v not in tops + bottoms]
    if len(tops) != 1 or len(bottoms) != 1 or len(middle) != 2 or frame.leq(*middle) \
            or frame.leq(middle[1], middle[0]):
        raise NotASemilatticeError("frame is not a diamond")
    return tops[0], middle[0], middle[1], bottoms[0]


def count_strong_semilattices(frame: Frame) -> StrongSemilatticeCount:
    """
    ss = sum over k in IS of ch(beta, k) * ch(gamma, k)

    IS is the set of exponents top -> bottom reachable through both middle
    nodes; ch counts the exponent pairs along one side composing to k.
    """
    top, beta, gamma, bottom = _diamond(frame)
    t = frame.types

    def side_counts(mid: str) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for k1 in exq(t[top], t[mid]).exponents:
            for k2 in exq(t[mid], t[bottom]).exponents:
                k = t[bottom].canonical(k1 * k2)
                counts[k] = counts.get(k, 0) + 1
        return counts

    left, right = side_counts(beta), side_counts(gamma)
    shared = tuple(sorted(set(left) & set(right)))
    ss = sum(left[k] * right[k] for k in shared)
    return StrongSemilatticeCount(intersection=shared, left_counts=left, right_counts=right, ss=ss)


# Deciding strong semilattice structure of a given semigroup

def cyclic_decomposition(S: CayleySemigroup) -> Dict[int, int]:
    """Least generator of each Archimedean component, which must be cyclic"""
    components: Dict[int, List[int]] = {}
    for x in range(S.size):
        components.setdefault(cyclic_type(S, x).idempotent, []).append(x)
    out = {}
    for e in sorted(components):
        members = set(components[e])
        gen = next((g for g in sorted(members) if set(cyclic_type(S, g).powers) == members), None)
        if gen is None:
            raise InvalidDecompositionError(f"component of {S.name(e)} is not cyclic",
                                            witness=S.name(e))
        out[e] = gen
    return out


@dataclass(frozen=True)
class StrongCheck:
    is_strong: bool
    exponents: Dict[Tuple[int, int], int]
    witness: Optional[str] = None


def _validate_decomposition(S: CayleySemigroup, generators: Mapping[int, int]):
    covered = set()
    for e, g in generators.items():
        data = cyclic_type(S, g)
        if data.idempotent != e:
            raise InvalidDecompositionError(f"{S.name(g)} does not generate around {S.name(e)}",
                                            witness=(S.name(e), S.name(g)))
        block = set(data.powers)
        component = {x for x in range(S.size) if cyclic_type(S, x).idempotent == e}
        if block != component:
            raise InvalidDecompositionError(f"<{S.name(g)}> is not the whole component",
                                            witness=S.name(g))
        covered |= block
    if set(generators) != set(idempotents(S)) or len(covered) != S.size:
        raise InvalidDecompositionError("generators do not index every idempotent")


def is_strong_decomposition(S: CayleySemigroup, generators: Mapping[int, int]) -> StrongCheck:
    """
    Decide whether S is a strong semilattice of the given cyclic components

    For alpha > beta with generators a, b the structure exponent k must
    satisfy ab = b^{k+1}; exponents on covering edges are searched, composed
    along paths, and incomparable pairs are checked against their meet.

    Args:
        S: The semigroup
        generators: idempotent -> generator of its (cyclic) component
    """
    _validate_decomposition(S, generators)
    order = sorted(generators)
    types = {S.name(e): cyclic_type(S, generators[e]).cyclic_type for e in order}
    node_of = {e: S.name(e) for e in order}

    below = {(e, f) for e in order for f in order if e != f and S.mul(e, f) == f}
    candidates: Dict[Tuple[int, int], List[int]] = {}
    for e, f in sorted(below):
        a, b = generators[e], generators[f]
        target = types[node_of[f]]
        ab = S.mul(a, b)
        good = [k for k in exq(types[node_of[e]], target).exponents
                if S.power(b, k + 1) == ab]
        if not good:
            return StrongCheck(False, {}, witness=f"no morphism {S.name(e)} -> {S.name(f)} "
                                                  f"matches {S.name(a)}*{S.name(b)}")
        candidates[(e, f)] = good

    covering = [(e, f) for e, f in sorted(below)
                if not any((e, g) in below and (g, f) in below for g in order)]
    witness = "no exponent assignment composes consistently"
    for choice in product(*(candidates[c] for c in covering)):
        edges = [FrameEdge(node_of[e], node_of[f], k) for (e, f), k in zip(covering, choice)]
        try:
            comp = Frame(types, edges).composites()
        except PathDisagreementError as exc:
            witness = exc.message
            continue
        exps = {(e, f): comp[(node_of[e], node_of[f])] for e, f in below}
        if any(k not in candidates[pair] for pair, k in exps.items()):
            witness = "composite exponent contradicts a product of generators"
            continue
        clash = None
        for i, e in enumerate(order):
            for f in order[i + 1:]:
                if (e, f) in below or (f, e) in below:
                    continue
                d = S.mul(e, f)
                k = comp[(node_of[e], node_of[d])] + comp[(node_of[f], node_of[d])]
                if S.mul(generators[e], generators[f]) != S.power(generators[d], k):
                    clash = f"{S.name(generators[e])}*{S.name(generators[f])} breaks the meet rule"
                    break
            if clash:
                break
        if clash:
            witness = clash
            continue
        return StrongCheck(True, exps)
    return StrongCheck(False, {}, witness=witness)
