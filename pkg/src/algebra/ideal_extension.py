"""
Ideal Extensions of Cyclic Semigroups
Quintuples (m, n, m', n'; k), their realizability and the realizing Cayley tables
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..errors import NotRealizableError
from ..semigroup.cayley import CayleySemigroup, adjoin_zero, cyclic_semigroup, cyclic_type
from ..semigroup.cyclic import CyclicType
from .cyclic_hom import Frame, FrameEdge, build_strong_semilattice

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Quintuple:
    """C_{m,n} = <a> extends C_{m',n'} = <b> with ab = b^{k+1}"""

    m: int
    n: int
    m_prime: int
    n_prime: int
    k: int

    def __post_init__(self):
        for name in ('m', 'n', 'm_prime', 'n_prime'):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if not 0 <= self.k <= self.m_prime + self.n_prime - 1:
            raise ValueError(f"k must lie in [0, {self.m_prime + self.n_prime - 1}], got {self.k}")

    def __str__(self) -> str:
        return f"({self.m},{self.n},{self.m_prime},{self.n_prime};{self.k})"

    @property
    def outer(self) -> CyclicType:
        return CyclicType(self.m, self.n)

    @property
    def inner(self) -> CyclicType:
        return CyclicType(self.m_prime, self.n_prime)


def violated_conditions(q: Quintuple) -> List[str]:
    if q.k == 0:
        return []
    failed = []
    if q.m_prime - 1 > q.m * q.k:
        failed.append(f"R1: m'-1 = {q.m_prime - 1} > mk = {q.m * q.k}")
    if (q.n * q.k) % q.n_prime:
        failed.append(f"R2: n' = {q.n_prime} does not divide nk = {q.n * q.k}")
    return failed


def is_realizable(q: Quintuple) -> bool:
    return not violated_conditions(q)


def is_strongly_realizable(q: Quintuple) -> bool:
    return q.k >= 1 and q.m_prime <= q.m * q.k and (q.n * q.k) % q.n_prime == 0


def _mixed_exponent(q: Quintuple, i: int, j: int) -> int:
    """Exponent of b in a^i * b^j"""
    return q.inner.canonical(i * q.k + j)


def find_class_conflict(q: Quintuple) -> Optional[Tuple[int, int, int, int, int]]:
    """
    First (i, i+n, j, e1, e2) where a^i = a^{i+n} yet a^i b^j = b^e1 differs from b^e2
    """
    for i in range(q.m, q.m + q.n):
        for j in range(1, q.inner.order + 1):
            left, right = _mixed_exponent(q, i, j), _mixed_exponent(q, i + q.n, j)
            if left != right:
                return i, i + q.n, j, left, right
    return None


@dataclass(frozen=True)
class RealizedExtension:
    semigroup: CayleySemigroup
    a: int
    b: int
    quintuple: Quintuple


def _element_names(q: Quintuple) -> List[str]:
    outer = ["a" if i == 1 else f"a^{i}" for i in range(1, q.outer.order + 1)]
    inner = ["b" if j == 1 else f"b^{j}" for j in range(1, q.inner.order + 1)]
    return outer + inner


def realize(q: Quintuple) -> RealizedExtension:
    """
    Cayley table of <a> with <b> as ideal and a^i * b^j = b^{ik+j}

    Raises:
        NotRealizableError: the class product is ill-defined; the witness shows where
    """
    conflict = find_class_conflict(q)
    if conflict is not None:
        i, i2, j, e1, e2 = conflict
        reasons = "; ".join(violated_conditions(q)) or "class product ill-defined"
        raise NotRealizableError(f"{q} is not realizable ({reasons})",
                                 witness=f"a^{i} = a^{i2} but a^{i}*b^{j} = b^{e1} and "
                                         f"a^{i2}*b^{j} = b^{e2}")
    outer, inner = q.outer, q.inner
    na, nb = outer.order, inner.order
    table = np.zeros((na + nb, na + nb), dtype=np.int64)
    for i in range(1, na + 1):
        for i2 in range(1, na + 1):
            table[i - 1, i2 - 1] = outer.multiply(i, i2) - 1
        for j in range(1, nb + 1):
            table[i - 1, na + j - 1] = table[na + j - 1, i - 1] = na + _mixed_exponent(q, i, j) - 1
    for j in range(1, nb + 1):
        for j2 in range(1, nb + 1):
            table[na + j - 1, na + j2 - 1] = na + inner.multiply(j, j2) - 1
    semigroup = CayleySemigroup(table, _element_names(q))
    log.debug("realized %s with %d elements", q, na + nb)
    return RealizedExtension(semigroup=semigroup, a=0, b=na, quintuple=q)


def strong_extension(q: Quintuple) -> RealizedExtension:
    """The extension induced by the morphism a -> b^k (a^i b^j = (a^i f) b^j)"""
    if not is_strongly_realizable(q):
        raise NotRealizableError(f"{q} is not induced by a morphism",
                                 witness=f"m'={q.m_prime}, mk={q.m * q.k}, n'={q.n_prime}, nk={q.n * q.k}")
    frame = Frame({"a": q.outer, "b": q.inner}, [FrameEdge("a", "b", q.k)])
    return RealizedExtension(semigroup=build_strong_semilattice(frame), a=0,
                             b=q.outer.order, quintuple=q)


def verify_quintuple_laws(ext: RealizedExtension) -> bool:
    """<a,b> = <a> + <b> disjointly, the two cyclic types, and ab = b^{k+1}"""
    S, q = ext.semigroup, ext.quintuple
    pa, pb = cyclic_type(S, ext.a), cyclic_type(S, ext.b)
    disjoint = not set(pa.powers) & set(pb.powers) and len(pa.powers) + len(pb.powers) == S.size
    return (disjoint
            and pa.cyclic_type == q.outer
            and pb.cyclic_type == q.inner
            and S.mul(ext.a, ext.b) == S.power(ext.b, q.k + 1))


def inner_ideal(ext: RealizedExtension) -> frozenset:
    return frozenset(cyclic_type(ext.semigroup, ext.b).powers)


def outer_with_zero(q: Quintuple) -> CayleySemigroup:
    """C_{m,n} with a zero adjoined, the expected Rees quotient by <b>"""
    return adjoin_zero(cyclic_semigroup(q.m, q.n))


@dataclass(frozen=True)
class ClassificationRow:
    k: int
    realizable: bool
    strong: bool
    trivial: bool
    duplicate_of: Optional[int] = None


def classify(m: int, n: int, m_prime: int, n_prime: int) -> List[ClassificationRow]:
    """Tag every k in [0, m'+n'-1]; k = m'+n'-1 shares its realizer with k = m'-1"""
    top = m_prime + n_prime - 1
    rows = []
    for k in range(top + 1):
        q = Quintuple(m, n, m_prime, n_prime, k)
        realizable = is_realizable(q)
        duplicate = None
        if k == top and realizable and is_realizable(Quintuple(m, n, m_prime, n_prime, m_prime - 1)):
            duplicate = m_prime - 1
        rows.append(ClassificationRow(k=k, realizable=realizable,
                                      strong=is_strongly_realizable(q),
                                      trivial=k == 0 or duplicate == 0,
                                      duplicate_of=duplicate))
    return rows
