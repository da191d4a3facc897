"""
Implications and Closure Systems
Sigma-closure, 012-row covers of the closed sets and relatively free semilattices
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import DEFAULT_BUDGETS
from ..errors import BudgetExceededError, NotASemilatticeError
from ..semigroup.cayley import CayleySemigroup, is_semilattice

log = logging.getLogger(__name__)

JoinTerm = Tuple[str, ...]


@dataclass(frozen=True)
class Implication:
    """premise -> conclusion over named ground elements"""

    premise: frozenset
    conclusion: frozenset

    def __post_init__(self):
        object.__setattr__(self, 'premise', frozenset(self.premise))
        object.__setattr__(self, 'conclusion', frozenset(self.conclusion))
        if not self.premise:
            raise ValueError("implications need a non-empty premise")

    def normalized(self) -> 'Implication':
        """Same implication with the premise removed from the conclusion"""
        return Implication(self.premise, self.conclusion - self.premise)

    def holds_in(self, subset: Iterable[str]) -> bool:
        members = set(subset)
        return not self.premise <= members or self.conclusion <= members

    def format(self, ground: Sequence[str]) -> str:
        def side(s):
            return " ".join(x for x in ground if x in s)
        return f"{side(self.premise)} -> {side(self.conclusion)}"


@dataclass(frozen=True)
class ImplicationBase:
    """A family Sigma of implications over the ordered ground set"""

    ground: Tuple[str, ...]
    implications: Tuple[Implication, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'ground', tuple(self.ground))
        object.__setattr__(self, 'implications', tuple(self.implications))
        if len(set(self.ground)) != len(self.ground):
            raise ValueError(f"duplicate ground elements in {self.ground}")
        known = set(self.ground)
        for imp in self.implications:
            unknown = (imp.premise | imp.conclusion) - known
            if unknown:
                raise ValueError(f"implication mentions unknown elements {sorted(unknown)}")

    @property
    def size(self) -> int:
        return len(self.ground)

    def mask(self, subset: Iterable[str]) -> int:
        position = {x: i for i, x in enumerate(self.ground)}
        out = 0
        for x in subset:
            out |= 1 << position[x]
        return out

    def members(self, mask: int) -> frozenset:
        return frozenset(x for i, x in enumerate(self.ground) if mask >> i & 1)

    def mask_pairs(self) -> List[Tuple[int, int]]:
        return [(self.mask(imp.premise), self.mask(imp.conclusion)) for imp in self.implications]

    def holds_in(self, subset: Iterable[str]) -> bool:
        members = set(subset)
        return all(imp.holds_in(members) for imp in self.implications)


def _closure_mask(mask: int, pairs: Sequence[Tuple[int, int]]) -> int:
    changed = True
    while changed:
        changed = False
        for premise, conclusion in pairs:
            if premise & mask == premise and conclusion & ~mask:
                mask |= conclusion
                changed = True
    return mask


def sigma_closure(subset: Iterable[str], base: ImplicationBase) -> frozenset:
    """Least superset of `subset` in which every implication holds"""
    return base.members(_closure_mask(base.mask(subset), base.mask_pairs()))


# 012-row covers

def _propagate(ones: int, zeros: int, pairs) -> Optional[Tuple[int, int]]:
    changed = True
    while changed:
        changed = False
        for premise, conclusion in pairs:
            if premise & zeros:
                continue
            if premise & ones == premise:
                if conclusion & zeros:
                    return None
                if conclusion & ~ones:
                    ones |= conclusion
                    changed = True
            elif conclusion & zeros:
                open_bits = premise & ~ones
                if open_bits & (open_bits - 1) == 0:
                    zeros |= open_bits   # the last open premise element must stay out
                    changed = True
    return ones, zeros


def _row(ones: int, zeros: int, k: int) -> str:
    return "".join('1' if ones >> i & 1 else '0' if zeros >> i & 1 else '2' for i in range(k))


@dataclass(frozen=True)
class ClosureCover:
    ground: Tuple[str, ...]
    rows: Tuple[str, ...]

    @property
    def count(self) -> int:
        return sum(2 ** row.count('2') for row in self.rows)

    def expand(self) -> List[frozenset]:
        """Every closed set represented by the rows"""
        out = []
        for row in self.rows:
            free = [i for i, s in enumerate(row) if s == '2']
            fixed = {self.ground[i] for i, s in enumerate(row) if s == '1'}
            for r in range(len(free) + 1):
                for chosen in combinations(free, r):
                    out.append(frozenset(fixed | {self.ground[i] for i in chosen}))
        return out


def closure_cover(base: ImplicationBase,
                  max_ground_set: int = DEFAULT_BUDGETS.max_ground_set) -> ClosureCover:
    """
    Disjoint 012-rows whose union is exactly the family of Sigma-closed sets

    Depth-first: branch on an open element of an unresolved premise (0 before
    1), propagate forced symbols, and emit a row once every implication is
    vacuous or satisfied.
    """
    k = base.size
    if k > max_ground_set:
        raise BudgetExceededError(f"ground set of {k} elements exceeds budget {max_ground_set}")
    pairs = [(p, c & ~p) for p, c in base.mask_pairs() if c & ~p]
    rows: List[str] = []
    stack = [(0, 0)]
    while stack:
        state = _propagate(*stack.pop(), pairs)
        if state is None:
            continue
        ones, zeros = state
        unresolved = next((p for p, c in pairs if not p & zeros and c & ~ones), None)
        if unresolved is None:
            rows.append(_row(ones, zeros, k))
            continue
        open_bits = unresolved & ~ones
        bit = open_bits & -open_bits
        stack.append((ones | bit, zeros))
        stack.append((ones, zeros | bit))
    log.debug("closure cover over %d elements: %d rows", k, len(rows))
    return ClosureCover(ground=base.ground, rows=tuple(sorted(rows)))


def closure_system(base: ImplicationBase) -> List[frozenset]:
    """All closed sets ordered by size, then ground order"""
    sets = closure_cover(base).expand()
    return sorted(sets, key=lambda s: _subset_key(base, s))


def _subset_key(base: ImplicationBase, subset: frozenset):
    return (len(subset), tuple(0 if x in subset else 1 for x in base.ground))


def _set_name(base: ImplicationBase, subset: frozenset) -> str:
    return "{" + ",".join(x for x in base.ground if x in subset) + "}"


def closure_system_semilattice(base: ImplicationBase) -> CayleySemigroup:
    """(C(Sigma), intersection), the empty set included"""
    sets = closure_system(base)
    index = {s: i for i, s in enumerate(sets)}
    n = len(sets)
    table = np.zeros((n, n), dtype=np.int64)
    for i, u in enumerate(sets):
        for j, v in enumerate(sets):
            table[i, j] = index[u & v]
    return CayleySemigroup(table, [_set_name(base, s) for s in sets], validate=False)


# Join-semilattice presentations

def semilattice_relations_to_implications(ground: Sequence[str],
                                          relations: Iterable[Tuple[JoinTerm, JoinTerm]]
                                          ) -> ImplicationBase:
    """u = v becomes supp(u) -> supp(v) and supp(v) -> supp(u)"""
    implications = []
    for left, right in relations:
        implications.append(Implication(frozenset(left), frozenset(right)))
        implications.append(Implication(frozenset(right), frozenset(left)))
    return ImplicationBase(tuple(ground), tuple(implications))


def _join_name(base: ImplicationBase, subset: Iterable[str]) -> str:
    joiner = '' if all(len(x) == 1 for x in base.ground) else ' v '
    return joiner.join(x for x in base.ground if x in set(subset))


def least_generating_subset(base: ImplicationBase, closed: frozenset) -> frozenset:
    """Military-least subset of `closed` whose closure is `closed`"""
    pairs = base.mask_pairs()
    target = base.mask(closed)
    members = [x for x in base.ground if x in closed]
    for r in range(1, len(members) + 1):
        for chosen in combinations(members, r):
            if _closure_mask(base.mask(chosen), pairs) == target:
                return frozenset(chosen)
    raise ValueError("closed set has no generating subset")


def generating_name(base: ImplicationBase, closed: frozenset) -> str:
    return _join_name(base, least_generating_subset(base, closed))


@dataclass(frozen=True)
class RelativelyFreeSemilattice:
    semigroup: CayleySemigroup
    closed_sets: Tuple[frozenset, ...]
    generators: Dict[str, int]
    base: ImplicationBase


def rfsl_from_base(base: ImplicationBase,
                   max_ground_set: int = DEFAULT_BUDGETS.max_ground_set) -> RelativelyFreeSemilattice:
    """
    Semilattice on the non-empty closed sets with U * V = cl(U + V)

    Elements are named by their military-least generating subset and listed
    in military order of those names.
    """
    pairs = base.mask_pairs()
    closed = [s for s in closure_cover(base, max_ground_set).expand() if s]
    named = []
    for s in closed:
        generating = least_generating_subset(base, s)
        named.append((_subset_key(base, generating), _join_name(base, generating), s))
    named.sort(key=lambda item: item[0])
    sets = [s for _, _, s in named]
    index = {base.mask(s): i for i, s in enumerate(sets)}
    n = len(sets)
    table = np.zeros((n, n), dtype=np.int64)
    for i, u in enumerate(sets):
        for j, v in enumerate(sets):
            table[i, j] = index[_closure_mask(base.mask(u | v), pairs)]
    semigroup = CayleySemigroup(table, [name for _, name, _ in named])
    generators = {x: index[_closure_mask(base.mask({x}), pairs)] for x in base.ground}
    log.info("relatively free semilattice with %d elements", n)
    return RelativelyFreeSemilattice(semigroup=semigroup, closed_sets=tuple(sets),
                                     generators=generators, base=base)


def rfsl(generators: Sequence[str], relations: Iterable[Tuple[JoinTerm, JoinTerm]],
         max_ground_set: int = DEFAULT_BUDGETS.max_ground_set) -> CayleySemigroup:
    base = semilattice_relations_to_implications(generators, relations)
    return rfsl_from_base(base, max_ground_set).semigroup


# Semilattice utilities

def _require_semilattice(Y: CayleySemigroup):
    if not is_semilattice(Y):
        raise NotASemilatticeError("not every element is idempotent")


def embed_into_powerset(Y: CayleySemigroup) -> np.ndarray:
    """
    Row y is the bit-vector f(y) = {i : y_i <= y}, so that f(xy) = f(x) & f(y)

    Raises:
        NotASemilatticeError: Y has a non-idempotent element
    """
    _require_semilattice(Y)
    n = Y.size
    t = Y.table
    below = t == np.arange(n)[None, :]       # below[y, i]: y_i * y == y_i
    vectors = below.astype(np.int8)
    if len({tuple(v) for v in vectors.tolist()}) != n:
        raise NotASemilatticeError("powerset map is not injective")
    meets = vectors[t.reshape(-1)].reshape(n, n, n)
    if not np.array_equal(meets, vectors[:, None, :] & vectors[None, :, :]):
        raise NotASemilatticeError("powerset map does not turn products into intersections")
    return vectors


def largest_fiber(Y: CayleySemigroup, x: int, pool: Optional[Iterable[int]] = None) -> Optional[frozenset]:
    """
    Largest T within `pool` (default all of Y) whose product is x

    T consists of every g with gx = x; None when that product misses x.
    """
    _require_semilattice(Y)
    candidates = sorted(set(range(Y.size) if pool is None else pool))
    fiber = [g for g in candidates if Y.mul(g, x) == x]
    if not fiber or Y.product_of(fiber) != x:
        return None
    return frozenset(fiber)
