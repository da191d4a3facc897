"""
Structure of a Finite Commutative Semigroup
Archimedean components, idempotent semilattice, component kernels, nil posets and kernel group types
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..algebra.abelian import AbelianType, order_profile_of_group, order_statistics_type
from ..errors import NotIdempotentError
from .cayley import (CayleySemigroup, CongruencePartition, ElementSet, cyclic_type,
                     hasse_covers, idempotents, j_classes)

log = logging.getLogger(__name__)


def archimedean_components(S: CayleySemigroup) -> Dict[int, ElementSet]:
    """A_e = {x : e is the power-idempotent of x}, keyed by e in id order"""
    buckets: Dict[int, List[int]] = {e: [] for e in sorted(idempotents(S))}
    for x in range(S.size):
        buckets[cyclic_type(S, x).idempotent].append(x)
    return {e: frozenset(members) for e, members in buckets.items()}


def component_partition(S: CayleySemigroup) -> CongruencePartition:
    """The congruence eta whose blocks are the Archimedean components"""
    return CongruencePartition.from_labels([cyclic_type(S, x).idempotent for x in range(S.size)])


def power_digraph_components(S: CayleySemigroup) -> CongruencePartition:
    """Weak components of the digraph x -> x^k; agrees with the Archimedean partition"""
    rows, cols = [], []
    for x in range(S.size):
        for p in cyclic_type(S, x).powers:
            rows.append(x)
            cols.append(p)
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)),
                       shape=(S.size, S.size))
    _, labels = connected_components(graph, directed=True, connection='weak')
    return CongruencePartition.from_labels(labels.tolist())


@dataclass(frozen=True)
class IdempotentSemilattice:
    """E(S) ordered by e <= f iff ef = e; the meet is the product"""

    elements: Tuple[int, ...]
    leq: np.ndarray
    meet: np.ndarray           # positions into `elements`
    covers: Tuple[Tuple[int, int], ...]

    def position(self, e: int) -> int:
        return self.elements.index(e)


def idempotent_semilattice(S: CayleySemigroup) -> IdempotentSemilattice:
    elements = tuple(sorted(idempotents(S)))
    idx = np.array(elements, dtype=np.int64)
    products = S.table[np.ix_(idx, idx)]
    position = {e: i for i, e in enumerate(elements)}
    meet = np.vectorize(position.__getitem__, otypes=[np.int64])(products)
    leq = products == idx[:, None]
    return IdempotentSemilattice(elements=elements, leq=leq, meet=meet, covers=hasse_covers(leq))


def _require_idempotent(S: CayleySemigroup, e: int):
    if S.mul(e, e) != e:
        raise NotIdempotentError(f"{S.name(e)} is not idempotent", witness=S.name(e))


def component_kernel(S: CayleySemigroup, e: int) -> ElementSet:
    """K(A_e) = {x in A_e : ex = x}"""
    _require_idempotent(S, e)
    component = [x for x in range(S.size) if cyclic_type(S, x).idempotent == e]
    return frozenset(x for x in component if S.mul(e, x) == x)


@dataclass(frozen=True)
class NilPoset:
    """
    Cover relation of the nil semigroup A_e / K(A_e)

    The zero of the quotient is represented by the idempotent `e`; every other
    node is an element of A_e outside the kernel.
    """

    idempotent: int
    nodes: Tuple[int, ...]
    covers: Tuple[Tuple[int, int], ...]            # (lower, upper)
    proper_multiples: Dict[int, frozenset] = field(default_factory=dict)
    heights: Dict[int, int] = field(default_factory=dict)

    @property
    def zero(self) -> int:
        return self.idempotent

    def upper_covers(self, x: int) -> Tuple[int, ...]:
        return tuple(hi for lo, hi in self.covers if lo == x)

    def lower_covers(self, x: int) -> Tuple[int, ...]:
        return tuple(lo for lo, hi in self.covers if hi == x)


def nil_poset(S: CayleySemigroup, e: int) -> NilPoset:
    """
    Covers from proper multiples: y is covered by x iff y in PM(x) and no
    z in PM(x) has y in PM(z). Nodes are layered by height, ties by id.
    """
    _require_idempotent(S, e)
    kernel = component_kernel(S, e)
    component = [x for x in range(S.size) if cyclic_type(S, x).idempotent == e]
    outside = [x for x in component if x not in kernel]

    def project(x: int) -> int:
        return e if x in kernel else x

    pm: Dict[int, frozenset] = {e: frozenset()}
    for x in outside:
        multiples = {e}
        multiples.update(project(S.mul(x, y)) for y in outside)
        multiples.discard(x)
        pm[x] = frozenset(multiples)

    covers = []
    for x in outside:
        for y in sorted(pm[x]):
            if not any(y in pm[z] for z in pm[x]):
                covers.append((y, x))

    heights = {e: 0}
    for x in sorted(outside, key=lambda v: len(pm[v])):
        heights[x] = 1 + max(heights[lo] for lo, hi in covers if hi == x)
    nodes = tuple(sorted(pm, key=lambda v: (heights[v], v != e, v)))
    covers.sort(key=lambda c: (heights[c[1]], c[1], heights[c[0]], c[0]))
    return NilPoset(idempotent=e, nodes=nodes, covers=tuple(covers),
                    proper_multiples=pm, heights=heights)


def kernel_group_type(S: CayleySemigroup, e: int) -> AbelianType:
    """Type of the group K(A_e) from its element orders around e"""
    kernel = component_kernel(S, e)
    return order_statistics_type(order_profile_of_group(S, e, sorted(kernel)))


@dataclass(frozen=True)
class StructureReport:
    """Steps (components, semilattice, kernels, nil posets, group types) for one semigroup"""

    components: Dict[int, ElementSet]
    semilattice: IdempotentSemilattice
    kernels: Dict[int, ElementSet]
    nil_posets: Dict[int, NilPoset]
    group_types: Dict[int, AbelianType]

    @property
    def component_sizes(self) -> List[int]:
        return [len(c) for c in self.components.values()]

    def as_dict(self, S: CayleySemigroup) -> dict:
        name = S.name
        sl = self.semilattice
        return {
            'size': S.size,
            'components': {name(e): sorted(name(x) for x in c) for e, c in self.components.items()},
            'semilattice': {
                'elements': [name(e) for e in sl.elements],
                'covers': [[name(sl.elements[lo]), name(sl.elements[hi])] for lo, hi in sl.covers],
                'meet': [[name(sl.elements[int(v)]) for v in row] for row in sl.meet],
            },
            'kernels': {name(e): sorted(name(x) for x in k) for e, k in self.kernels.items()},
            'nil_posets': {
                name(e): [[_node_name(S, p, lo), _node_name(S, p, hi)] for lo, hi in p.covers]
                for e, p in self.nil_posets.items()
            },
            'group_types': {name(e): list(t.invariant_factors) for e, t in self.group_types.items()},
        }


def _node_name(S: CayleySemigroup, poset: NilPoset, x: int) -> str:
    return "0" if x == poset.zero else S.name(x)


def structure_report(S: CayleySemigroup) -> StructureReport:
    components = archimedean_components(S)
    semilattice = idempotent_semilattice(S)
    kernels = {e: component_kernel(S, e) for e in components}
    posets = {e: nil_poset(S, e) for e in components}
    types = {e: kernel_group_type(S, e) for e in components}
    log.info("structure: %d components, sizes %s", len(components),
             [len(c) for c in components.values()])
    return StructureReport(components=components, semilattice=semilattice, kernels=kernels,
                           nil_posets=posets, group_types=types)


def is_j_trivial(S: CayleySemigroup) -> bool:
    return j_classes(S).n_blocks == S.size


def is_semilattice_of_groups(S: CayleySemigroup) -> bool:
    """Every Archimedean component coincides with its kernel"""
    return all(component_kernel(S, e) == c for e, c in archimedean_components(S).items())
