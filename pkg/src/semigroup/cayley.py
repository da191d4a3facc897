"""
Finite Commutative Semigroups as Cayley Tables
Construction, validation, element and ideal queries, congruences and the J-relation
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import reduce as fold
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import Budgets, DEFAULT_BUDGETS
from ..errors import (BudgetExceededError, InvalidCongruenceError, InvalidTableError,
                      NoIdentityError, NotAnIdealError, NotAssociativeError,
                      NotCommutativeError)
from ..words.free_words import format_word
from ..words.rewriting import RuleSystem, enumerate_normal_forms, reduce
from .cyclic import CyclicType, cyclic_table

log = logging.getLogger(__name__)

ElementSet = FrozenSet[int]


class CayleySemigroup:
    """
    Commutative semigroup on ids 0..n-1 given by its multiplication table

    The table is validated for range, commutativity and associativity unless
    `validate=False` is passed by a constructor that guarantees both laws.
    """

    def __init__(self, table, names: Optional[Sequence[str]] = None, validate: bool = True):
        t = np.array(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise InvalidTableError(f"table must be a non-empty square matrix, got shape {t.shape}")
        n = t.shape[0]
        bad = np.argwhere((t < 0) | (t >= n))
        if len(bad):
            i, j = (int(v) for v in bad[0])
            raise InvalidTableError(f"entry t[{i}][{j}] = {t[i, j]} is not an element id",
                                    witness=(i, j))
        if names is None:
            names = [str(i) for i in range(n)]
        names = tuple(str(name) for name in names)
        if len(names) != n:
            raise InvalidTableError(f"{len(names)} names for {n} elements")

        self._table = t
        self._names = names
        if validate:
            self._check_commutative()
            self._check_associative()
        t.setflags(write=False)

    def _check_commutative(self):
        t = self._table
        if not np.array_equal(t, t.T):
            i, j = (int(v) for v in np.argwhere(t != t.T)[0])
            raise NotCommutativeError(f"t[{i}][{j}] != t[{j}][{i}]", witness=(i, j))

    def _check_associative(self):
        t = self._table
        for i in range(self.size):
            left = t[t[i, :], :]    # (i*j)*k over (j, k)
            right = t[i, t]         # i*(j*k) over (j, k)
            if not np.array_equal(left, right):
                j, k = (int(v) for v in np.argwhere(left != right)[0])
                raise NotAssociativeError(f"(x{i}*x{j})*x{k} != x{i}*(x{j}*x{k})",
                                          witness=(i, j, k))

    @property
    def size(self) -> int:
        return self._table.shape[0]

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def names(self) -> Tuple[str, ...]:
        return self._names

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"CayleySemigroup(size={self.size})"

    def mul(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def power(self, x: int, k: int) -> int:
        if k < 1:
            raise ValueError("powers start at 1")
        result = x
        for _ in range(k - 1):
            result = int(self._table[result, x])
        return result

    def product_of(self, elements: Iterable[int]) -> int:
        return fold(self.mul, elements)

    def name(self, x: int) -> str:
        return self._names[x]

    def index(self, name: str) -> int:
        try:
            return self._names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    def format_set(self, elements: Iterable[int]) -> str:
        return "{" + ", ".join(self._names[x] for x in sorted(elements)) + "}"


@dataclass(frozen=True)
class CongruencePartition:
    """Block id per element; block ids are numbered by their least element"""

    labels: Tuple[int, ...]

    @staticmethod
    def from_labels(labels: Sequence[int]) -> 'CongruencePartition':
        renumber: Dict[int, int] = {}
        canonical = []
        for label in labels:
            renumber.setdefault(int(label), len(renumber))
            canonical.append(renumber[int(label)])
        return CongruencePartition(tuple(canonical))

    @property
    def n_blocks(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    def block_of(self, x: int) -> int:
        return self.labels[x]

    def classes(self) -> List[Tuple[int, ...]]:
        blocks: List[List[int]] = [[] for _ in range(self.n_blocks)]
        for x, label in enumerate(self.labels):
            blocks[label].append(x)
        return [tuple(block) for block in blocks]

    def same_block(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]


@dataclass(frozen=True)
class PowerData:
    """Cyclic structure of <x>: type, power-idempotent and the powers x^1..x^o"""

    cyclic_type: CyclicType
    idempotent: int
    order: int
    powers: Tuple[int, ...]


# Constructors

def from_table(table, names: Optional[Sequence[str]] = None) -> CayleySemigroup:
    return CayleySemigroup(table, names)


def from_presentation(completed: RuleSystem,
                      budgets: Budgets = DEFAULT_BUDGETS) -> CayleySemigroup:
    """
    Cayley table of RFCS(generators : rules) over its normal forms

    Args:
        completed: Locally confluent presentation with finitely many normal forms
        budgets: max_elements caps the table size

    Returns:
        Semigroup whose ids follow the military order of the normal forms
    """
    words = enumerate_normal_forms(completed, limit=budgets.max_elements)
    index = {w: i for i, w in enumerate(words)}
    n = len(words)
    table = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            nf = reduce(words[i] * words[j], completed)
            table[i, j] = table[j, i] = index[nf]
    names = [format_word(w, completed.generators) for w in words]
    log.info("table of %d normal forms built from %d rules", n, len(completed.rules))
    return CayleySemigroup(table, names)


def direct_product(factors: Sequence[CayleySemigroup],
                   max_elements: int = DEFAULT_BUDGETS.max_elements) -> CayleySemigroup:
    """
    Component-wise product; id of (x_1, ..., x_r) is mixed-radix with x_1 most significant

    Names are tuples "(x1,x2,...)" of the factor names.
    """
    if not factors:
        raise ValueError("direct_product needs at least one factor")
    total = int(np.prod([f.size for f in factors], dtype=object))
    if total > max_elements:
        raise BudgetExceededError(f"product of size {total} exceeds element budget {max_elements}")

    table = factors[0].table
    for factor in factors[1:]:
        q = factor.size
        p = table.shape[0]
        table = (table[:, None, :, None] * q + factor.table[None, :, None, :]).reshape(p * q, p * q)
    names = ["(" + ",".join(combo) + ")" for combo in product(*(f.names for f in factors))]
    return CayleySemigroup(table, names, validate=False)


def product_ids(factors: Sequence[CayleySemigroup], coords: Sequence[int]) -> int:
    """Id of the tuple `coords` inside direct_product(factors)"""
    ident = 0
    for factor, x in zip(factors, coords):
        ident = ident * factor.size + x
    return ident


def cyclic_semigroup(m: int, n: int) -> CayleySemigroup:
    """C_{m,n}: id i-1 is a^i"""
    ctype = CyclicType(m, n)
    names = ["a" if i == 1 else f"a^{i}" for i in range(1, ctype.order + 1)]
    return CayleySemigroup(cyclic_table(ctype), names, validate=False)


def subsemigroup_table(S: CayleySemigroup, subset: Iterable[int]) -> CayleySemigroup:
    """Restriction of S to a closed subset, renumbered in id order"""
    members = sorted(set(subset))
    position = {x: i for i, x in enumerate(members)}
    idx = np.array(members, dtype=np.int64)
    block = S.table[np.ix_(idx, idx)]
    try:
        table = np.vectorize(position.__getitem__, otypes=[np.int64])(block)
    except KeyError as exc:
        raise InvalidTableError("subset is not closed under multiplication",
                                witness=int(exc.args[0])) from None
    return CayleySemigroup(table, [S.name(x) for x in members], validate=False)


def adjoin_zero(S: CayleySemigroup, name: str = "0") -> CayleySemigroup:
    """S with a new absorbing element appended as the last id"""
    n = S.size
    table = np.full((n + 1, n + 1), n, dtype=np.int64)
    table[:n, :n] = S.table
    return CayleySemigroup(table, list(S.names) + [name], validate=False)


def adjoin_identity(S: CayleySemigroup, name: str = "1") -> CayleySemigroup:
    """S^1: a new neutral element appended as the last id"""
    n = S.size
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    table[:n, :n] = S.table
    table[n, :] = np.arange(n + 1)
    table[:, n] = np.arange(n + 1)
    return CayleySemigroup(table, list(S.names) + [name], validate=False)


# Elements

def subsemigroup_generated(S: CayleySemigroup, subset: Iterable[int]) -> ElementSet:
    """Closure of a non-empty subset under multiplication"""
    current = set(int(x) for x in subset)
    if not current:
        raise ValueError("subsemigroup_generated needs a non-empty subset")
    while True:
        idx = np.array(sorted(current), dtype=np.int64)
        grown = current | set(np.unique(S.table[np.ix_(idx, idx)]).tolist())
        if grown == current:
            return frozenset(current)
        current = grown


def idempotents(S: CayleySemigroup) -> ElementSet:
    diag = np.diagonal(S.table)
    return frozenset(np.flatnonzero(diag == np.arange(S.size)).tolist())


def cyclic_type(S: CayleySemigroup, x: int) -> PowerData:
    """
    Index, period, power-idempotent and order of x

    Returns:
        PowerData with m, n minimal such that x^{m+n} = x^m
    """
    seen: Dict[int, int] = {}
    powers: List[int] = []
    p = x
    while p not in seen:
        seen[p] = len(powers) + 1
        powers.append(p)
        p = S.mul(p, x)
    m = seen[p]
    n = len(powers) + 1 - m
    ctype = CyclicType(m, n)
    e = powers[ctype.idempotent_exponent - 1]
    return PowerData(cyclic_type=ctype, idempotent=e, order=ctype.order, powers=tuple(powers))


def zero_of(S: CayleySemigroup) -> Optional[int]:
    t = S.table
    hits = np.flatnonzero(np.all(t == np.arange(S.size)[:, None], axis=1))
    return int(hits[0]) if len(hits) else None


def identity_of(S: CayleySemigroup) -> Optional[int]:
    t = S.table
    hits = np.flatnonzero(np.all(t == np.arange(S.size)[None, :], axis=1))
    return int(hits[0]) if len(hits) else None


def minimal_idempotent(S: CayleySemigroup) -> int:
    """e' = product of all idempotents, the least element of E(S)"""
    return S.product_of(sorted(idempotents(S)))


def kernel(S: CayleySemigroup) -> ElementSet:
    """
    Smallest ideal K(S) = e'S

    The result is checked to be an ideal that lies inside every principal
    ideal {x} + xS.

    Raises:
        InvalidTableError: the table breaks one of these checks
    """
    e = minimal_idempotent(S)
    ker = frozenset(S.table[e, :].tolist())
    if any(S.mul(e, k) != k for k in ker):
        raise InvalidTableError("kernel is not a group around the minimal idempotent", witness=e)
    witness = ideal_witness(S, ker)
    if witness is not None:
        raise InvalidTableError("e'S is not an ideal", witness=witness)
    idx = np.array(sorted(ker), dtype=np.int64)
    outside = np.flatnonzero(~np.all(multiples_matrix(S)[idx, :], axis=0))
    if len(outside):
        raise InvalidTableError("e'S is not contained in every principal ideal",
                                witness=int(outside[0]))
    log.debug("kernel of %d elements around idempotent %s", len(ker), S.name(e))
    return ker


# Ideals

def ideal_witness(S: CayleySemigroup, subset: Iterable[int]) -> Optional[Tuple[int, int, int]]:
    """First (a, s, as) with a in subset and as outside, or None for an ideal"""
    members = set(subset)
    for a in sorted(members):
        for s in range(S.size):
            p = S.mul(a, s)
            if p not in members:
                return a, s, p
    return None


def is_ideal(S: CayleySemigroup, subset: Iterable[int]) -> bool:
    members = set(subset)
    if not members:
        raise ValueError("ideals are non-empty")
    return ideal_witness(S, members) is None


def rees_quotient(S: CayleySemigroup, ideal: Iterable[int]) -> CayleySemigroup:
    """
    S/I with universe {0} and S minus I; the class of I becomes id 0 named "0"
    """
    members = set(ideal)
    if not members:
        raise ValueError("ideals are non-empty")
    witness = ideal_witness(S, members)
    if witness is not None:
        raise NotAnIdealError("subset is not an ideal", witness=witness)
    rest = [x for x in range(S.size) if x not in members]
    position = {x: i + 1 for i, x in enumerate(rest)}
    q = len(rest) + 1
    table = np.zeros((q, q), dtype=np.int64)
    for a in rest:
        for b in rest:
            table[position[a], position[b]] = position.get(S.mul(a, b), 0)
    return CayleySemigroup(table, ["0"] + [S.name(x) for x in rest], validate=False)


def rees_congruence(S: CayleySemigroup, ideal: Iterable[int]) -> CongruencePartition:
    members = set(ideal)
    rep = min(members)
    return CongruencePartition.from_labels([rep if x in members else x for x in range(S.size)])


# Predicates

def is_nil(S: CayleySemigroup) -> bool:
    z = zero_of(S)
    return z is not None and idempotents(S) == {z}


def is_group(S: CayleySemigroup) -> bool:
    one = identity_of(S)
    return one is not None and idempotents(S) == {one}


def is_semilattice(S: CayleySemigroup) -> bool:
    return len(idempotents(S)) == S.size


def is_archimedean(S: CayleySemigroup) -> bool:
    return len(idempotents(S)) == 1


def is_cancellative(S: CayleySemigroup) -> bool:
    rows = np.sort(S.table, axis=1)
    return bool(np.all(rows == np.arange(S.size)[None, :]))


def is_zero_semigroup(S: CayleySemigroup) -> bool:
    z = zero_of(S)
    return z is not None and bool(np.all(S.table == z))


def units(S: CayleySemigroup) -> ElementSet:
    """S^inv; requires an identity"""
    one = identity_of(S)
    if one is None:
        raise NoIdentityError("units need an identity element")
    return frozenset(np.flatnonzero(np.any(S.table == one, axis=1)).tolist())


# J-relation

def multiples_matrix(S: CayleySemigroup) -> np.ndarray:
    """M[a, b] is True iff a <=_J b, i.e. a = b or a in bS"""
    n = S.size
    M = np.eye(n, dtype=bool)
    rows = np.repeat(np.arange(n), n)
    M[S.table.reshape(-1), rows] = True
    return M


def j_leq(S: CayleySemigroup, a: int, b: int) -> bool:
    return a == b or bool(np.any(S.table[b, :] == a))


def j_classes(S: CayleySemigroup) -> CongruencePartition:
    M = multiples_matrix(S)
    mutual = M & M.T
    labels = [int(np.flatnonzero(mutual[x])[0]) for x in range(S.size)]
    return CongruencePartition.from_labels(labels)


@dataclass(frozen=True)
class ClassPoset:
    """Partial order on the blocks of a partition, with its Hasse covers"""

    classes: Tuple[Tuple[int, ...], ...]
    leq: np.ndarray
    covers: Tuple[Tuple[int, int], ...]   # (lower, upper)

    def minimum(self) -> Optional[int]:
        hits = [i for i in range(len(self.classes)) if np.all(self.leq[i, :])]
        return hits[0] if hits else None


def hasse_covers(leq: np.ndarray) -> Tuple[Tuple[int, int], ...]:
    r = leq.shape[0]
    strict = leq & ~np.eye(r, dtype=bool)
    covers = []
    for lo in range(r):
        for hi in range(r):
            if strict[lo, hi] and not np.any(strict[lo, :] & strict[:, hi]):
                covers.append((lo, hi))
    return tuple(covers)


def j_poset(S: CayleySemigroup) -> ClassPoset:
    """Quotient order [x] <=_J [y]; antisymmetry is checked"""
    part = j_classes(S)
    classes = part.classes()
    reps = [c[0] for c in classes]
    M = multiples_matrix(S)
    leq = M[np.ix_(reps, reps)]
    r = len(reps)
    both = leq & leq.T & ~np.eye(r, dtype=bool)
    if np.any(both):
        i, j = (int(v) for v in np.argwhere(both)[0])
        raise InvalidCongruenceError("J-quotient order is not antisymmetric", witness=(reps[i], reps[j]))
    return ClassPoset(classes=tuple(classes), leq=leq, covers=hasse_covers(leq))


# Congruences

def congruence_witness(S: CayleySemigroup,
                       theta: CongruencePartition) -> Optional[Tuple[int, int, int]]:
    """First (a, b, c) with a theta b but not ac theta bc"""
    labels = np.array(theta.labels, dtype=np.int64)
    if len(labels) != S.size:
        raise InvalidCongruenceError(f"partition covers {len(labels)} elements, semigroup has {S.size}")
    for block in theta.classes():
        rep = block[0]
        image = labels[S.table[rep, :]]
        for a in block[1:]:
            diff = np.flatnonzero(labels[S.table[a, :]] != image)
            if len(diff):
                return rep, a, int(diff[0])
    return None


def quotient(S: CayleySemigroup, theta: CongruencePartition) -> CayleySemigroup:
    """S/theta on block ids; block names are "[rep]" """
    witness = congruence_witness(S, theta)
    if witness is not None:
        raise InvalidCongruenceError("partition is not compatible with multiplication",
                                     witness=witness)
    labels = np.array(theta.labels, dtype=np.int64)
    reps = np.array([c[0] for c in theta.classes()], dtype=np.int64)
    table = labels[S.table[np.ix_(reps, reps)]]
    names = [f"[{S.name(int(r))}]" for r in reps]
    return CayleySemigroup(table, names, validate=False)


def smallest_congruence(S: CayleySemigroup,
                        pairs: Iterable[Tuple[int, int]]) -> CongruencePartition:
    """Least congruence containing the given pairs (union-find with a work queue)"""
    parent = list(range(S.size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = deque((int(a), int(b)) for a, b in pairs)
    while queue:
        a, b = queue.popleft()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[max(ra, rb)] = min(ra, rb)
        for c in range(S.size):
            queue.append((S.mul(a, c), S.mul(b, c)))
    return CongruencePartition.from_labels([find(x) for x in range(S.size)])


# Retract search over J-classes

@dataclass(frozen=True)
class RetractSearchResult:
    status: str                       # "found", "none" or "unknown"
    representatives: Optional[ElementSet] = None
    nodes: int = 0


class _SearchExhausted(Exception):
    pass


def j_retract_search(S: CayleySemigroup,
                     budget: int = DEFAULT_BUDGETS.search_budget) -> RetractSearchResult:
    """
    Look for one representative per J-class forming a subsemigroup

    Classes are visited by least id and candidates tried in id order; every
    product of chosen representatives forces the representative of its class.
    """
    part = j_classes(S)
    classes = part.classes()
    block = part.labels
    nodes = 0

    def propagate(chosen: Dict[int, int]) -> Optional[Dict[int, int]]:
        chosen = dict(chosen)
        changed = True
        while changed:
            changed = False
            reps = list(chosen.values())
            for x in reps:
                for y in reps:
                    p = S.mul(x, y)
                    b = block[p]
                    if b not in chosen:
                        chosen[b] = p
                        changed = True
                    elif chosen[b] != p:
                        return None
        return chosen

    def search(chosen: Dict[int, int]) -> Optional[Dict[int, int]]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _SearchExhausted()
        free = next((b for b in range(len(classes)) if b not in chosen), None)
        if free is None:
            return chosen
        for x in classes[free]:
            extended = propagate({**chosen, free: x})
            if extended is not None:
                found = search(extended)
                if found is not None:
                    return found
        return None

    start = propagate({b: c[0] for b, c in enumerate(classes) if len(c) == 1})
    try:
        found = search(start) if start is not None else None
    except _SearchExhausted:
        log.warning("retract search gave up after %d nodes", nodes)
        return RetractSearchResult(status="unknown", nodes=nodes)
    if found is None:
        return RetractSearchResult(status="none", nodes=nodes)
    return RetractSearchResult(status="found", representatives=frozenset(found.values()),
                               nodes=nodes)
