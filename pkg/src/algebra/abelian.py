"""
Finite Abelian Groups
Invariant-factor types from order statistics, Smith Normal Form and relatively free Abelian groups
"""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import gcd, prod
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

import numpy as np
from sympy import divisors, factorint, isprime
from sympy.functions.combinatorial.numbers import partition
from sympy.utilities.iterables import partitions

from ..errors import InfiniteGroupError, NotAbelianProfileError

log = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]
OrderProfile = Union[Mapping[int, int], Iterable[int]]


@dataclass(frozen=True)
class AbelianType:
    """C_{n_1} x ... x C_{n_t} with n_1 | n_2 | ... | n_t, all n_i >= 2"""

    invariant_factors: Tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(f) for f in self.invariant_factors)
        object.__setattr__(self, 'invariant_factors', factors)
        for f in factors:
            if f < 2:
                raise ValueError(f"invariant factors must be >= 2, got {factors}")
        for small, big in zip(factors, factors[1:]):
            if big % small:
                raise ValueError(f"{small} does not divide {big} in {factors}")

    @staticmethod
    def from_cyclic_factors(factors: Iterable[int]) -> 'AbelianType':
        """Normalize an arbitrary product of cyclic groups to invariant factors"""
        by_prime: Dict[int, List[int]] = {}
        for n in factors:
            if n < 1:
                raise ValueError(f"cyclic factor orders are positive, got {n}")
            for p, a in factorint(n).items():
                by_prime.setdefault(p, []).append(p ** a)
        columns = [sorted(powers, reverse=True) for powers in by_prime.values()]
        depth = max((len(c) for c in columns), default=0)
        rows = [prod(c[i] if i < len(c) else 1 for c in columns) for i in range(depth)]
        return AbelianType(tuple(reversed(rows)))

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def t_min(self) -> int:
        return len(self.invariant_factors)

    @property
    def elementary_divisors(self) -> Tuple[int, ...]:
        """All prime-power factors, ascending"""
        out = []
        for n in self.invariant_factors:
            out.extend(p ** a for p, a in factorint(n).items())
        return tuple(sorted(out))

    @property
    def t_max(self) -> int:
        return len(self.elementary_divisors)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"C_{n}" for n in self.invariant_factors)


def _as_counter(orders: OrderProfile) -> Counter:
    if isinstance(orders, Mapping):
        return Counter({int(k): int(v) for k, v in orders.items() if v})
    return Counter(int(o) for o in orders)


def _exact_log(value: int, p: int) -> int:
    k = 0
    while value > 1 and value % p == 0:
        value //= p
        k += 1
    if value != 1:
        raise NotAbelianProfileError("not an Abelian group order profile",
                                     witness=f"count not a power of {p}")
    return k


def synthesize_order_profile(atype: AbelianType) -> Counter:
    """Element-order multiset of a type: #{x : o(x) | d} = prod gcd(d, n_i)"""
    if not atype.invariant_factors:
        return Counter({1: 1})
    exponent = atype.invariant_factors[-1]
    exact: Dict[int, int] = {}
    for d in divisors(exponent):
        dividing = prod(gcd(d, n) for n in atype.invariant_factors)
        exact[d] = dividing - sum(c for e, c in exact.items() if d % e == 0)
    return Counter({d: c for d, c in exact.items() if c})


def _p_profile(profile: Counter, p: int) -> List[int]:
    """[t_0, t_1, ..., t_K] with p^{t_k} = #{x : o(x) | p^k}"""
    top = max(_valuation(o, p) for o in profile)
    counts = [sum(c for o, c in profile.items() if _valuation(o, p) <= k and _coprime_part(o, p) == 1)
              for k in range(top + 1)]
    return [_exact_log(c, p) for c in counts]


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _coprime_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def order_statistics_type(orders: OrderProfile) -> AbelianType:
    """
    Identify a finite Abelian group from the multiset of its element orders

    Per prime p with t_k = log_p #{x : o(x) | p^k}, the number of cyclic
    factors of order p^k is s_k = 2 t_k - t_{k+1} - t_{k-1}.

    Args:
        orders: Mapping order -> count, or an iterable of orders

    Returns:
        AbelianType

    Raises:
        NotAbelianProfileError: counts are inconsistent with any Abelian group
    """
    profile = _as_counter(orders)
    if not profile or profile.get(1) != 1:
        raise NotAbelianProfileError("not an Abelian group order profile",
                                     witness="exactly one element of order 1 required")
    primes = sorted({p for o in profile for p in factorint(o)})
    cyclic_factors: List[int] = []
    for p in primes:
        t = _p_profile(profile, p)
        t_ext = t + [t[-1]]
        for k in range(1, len(t)):
            s_k = 2 * t_ext[k] - t_ext[k + 1] - t_ext[k - 1]
            if s_k < 0:
                raise NotAbelianProfileError("not an Abelian group order profile",
                                             witness=f"negative factor count at {p}^{k}")
            cyclic_factors.extend([p ** k] * s_k)
    result = AbelianType.from_cyclic_factors(cyclic_factors)
    if synthesize_order_profile(result) != profile:
        raise NotAbelianProfileError("not an Abelian group order profile",
                                     witness=f"closest type {result} has a different profile")
    return result


def incremental_p_group_type(p: int, dividing_counts: Sequence[int]) -> List[int]:
    """
    Exponents of the cyclic factors of a p-group, built layer by layer

    Args:
        p: The prime
        dividing_counts: #{x : o(x) | p^k} for k = 0, 1, ..., K

    Returns:
        Exponents a with one factor C_{p^a} each, descending
    """
    t = [_exact_log(c, p) for c in dividing_counts]
    if not t or t[0] != 0:
        raise NotAbelianProfileError("the identity is the only element of order 1")
    # r[k] = number of cyclic factors of order >= p^k
    r = [t[k] - t[k - 1] for k in range(1, len(t))] + [0]
    exponents: List[int] = []
    for k in range(len(r) - 1, 0, -1):
        fresh = r[k - 1] - r[k]
        if fresh < 0:
            raise NotAbelianProfileError("not an Abelian group order profile",
                                         witness=f"layer {k} grows")
        exponents.extend([k] * fresh)
    return exponents


def type_from_incremental(orders: OrderProfile) -> AbelianType:
    """order_statistics_type computed prime by prime with the incremental procedure"""
    profile = _as_counter(orders)
    factors = []
    for p in sorted({p for o in profile for p in factorint(o)}):
        top = max(_valuation(o, p) for o in profile)
        counts = [sum(c for o, c in profile.items()
                      if _valuation(o, p) <= k and _coprime_part(o, p) == 1)
                  for k in range(top + 1)]
        factors.extend(p ** a for a in incremental_p_group_type(p, counts))
    return AbelianType.from_cyclic_factors(factors)


def order_profile_of_group(S, identity: int, elements: Iterable[int]) -> Counter:
    """Orders of the given group elements of a Cayley table relative to `identity`"""
    orders = Counter()
    for x in elements:
        power, k = x, 1
        while power != identity:
            power = int(S.table[power, x])
            k += 1
            if k > S.size + 1:
                raise NotAbelianProfileError("element has no finite order around the identity",
                                             witness=x)
        orders[k] += 1
    return orders


# Smith Normal Form

@dataclass(frozen=True)
class SmithForm:
    """C * A * B = D with C, B unimodular and D diagonal, d_i | d_{i+1}"""

    D: IntMatrix
    C: IntMatrix
    B: IntMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))


def _identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: Sequence[Sequence[int]], cols: int = None) -> SmithForm:
    """
    Smith Normal Form with exact integer arithmetic

    Pivots are the smallest non-zero absolute values; remainders smaller than
    the pivot trigger a move, and divisibility is restored by adding rows.

    Args:
        A: m x n integer matrix (rows = relations)
        cols: Column count, needed only when m = 0

    Returns:
        SmithForm(D, C, B)
    """
    M = [[int(v) for v in row] for row in A]
    m = len(M)
    n = len(M[0]) if m else (cols or 0)
    C, B = _identity(m), _identity(n)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        C[i], C[j] = C[j], C[i]

    def swap_cols(i, j):
        for mat in (M, B):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        for mat in (M, C):
            mat[dst] = [a + q * b for a, b in zip(mat[dst], mat[src])]

    def add_col(dst, src, q):
        for mat in (M, B):
            for row in mat:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        nonzero = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, n) if M[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)

        settled = False
        while not settled:
            settled = True
            for i in range(t + 1, m):
                add_row(i, t, -(M[i][t] // M[t][t]))
                if M[i][t]:
                    swap_rows(t, i)
                    settled = False
                    break
            if not settled:
                continue
            for j in range(t + 1, n):
                add_col(j, t, -(M[t][j] // M[t][t]))
                if M[t][j]:
                    swap_cols(t, j)
                    settled = False
                    break
            if not settled:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if M[i][j] % M[t][t]), None)
            if bad is not None:
                add_row(t, bad[0], 1)
                settled = False

        if M[t][t] < 0:
            M[t] = [-v for v in M[t]]
            C[t] = [-v for v in C[t]]

    as_tuple = lambda mat: tuple(tuple(row) for row in mat)
    return SmithForm(D=as_tuple(M), C=as_tuple(C), B=as_tuple(B))


def verify_smith_form(A: Sequence[Sequence[int]], form: SmithForm) -> bool:
    """Exact check of C*A*B == D plus the divisibility chain"""
    if not A:
        return True
    product_matrix = (np.array(form.C, dtype=object) @ np.array(A, dtype=object)
                      @ np.array(form.B, dtype=object))
    if product_matrix.tolist() != [list(row) for row in form.D]:
        return False
    diag = form.diagonal
    return all(b % a == 0 if a else b == 0 for a, b in zip(diag, diag[1:]))


def rfag_type(relations: Sequence[Sequence[int]], generators: int = None) -> AbelianType:
    """
    Type of the Abelian group on `generators` generators modulo the relation rows

    Raises:
        InfiniteGroupError: fewer non-zero invariants than generators
    """
    k = len(relations[0]) if relations else generators
    if not k:
        raise ValueError("rfag_type needs the generator count for an empty relation list")
    diag = smith_normal_form(relations, cols=k).diagonal if relations else ()
    nonzero = [d for d in diag if d]
    free_rank = k - len(nonzero)
    if free_rank > 0:
        raise InfiniteGroupError(f"group is infinite with free rank {free_rank}",
                                 free_rank=free_rank)
    return AbelianType(tuple(d for d in nonzero if d > 1))


# Counting and t_min / t_max

@dataclass(frozen=True)
class FactorTable:
    t_min: int
    t_max: int
    rows: Tuple[Tuple[int, ...], ...]    # rows[0] builds n_{t_min}, one column per prime
    primes: Tuple[int, ...]
    invariant_factors: Tuple[int, ...]


def tmin_tmax(atype: AbelianType) -> FactorTable:
    """Prime-power table whose row products are the invariant factors, largest first"""
    by_prime: Dict[int, List[int]] = {}
    for q in atype.elementary_divisors:
        p = next(iter(factorint(q)))
        by_prime.setdefault(p, []).append(q)
    primes = tuple(sorted(by_prime))
    columns = [sorted(by_prime[p], reverse=True) for p in primes]
    rows = tuple(tuple(c[i] if i < len(c) else 1 for c in columns)
                 for i in range(atype.t_min))
    return FactorTable(t_min=atype.t_min, t_max=atype.t_max, rows=rows, primes=primes,
                       invariant_factors=tuple(reversed(atype.invariant_factors)))


def count_abelian_groups_of_order(p: int, n: int) -> int:
    """Number of Abelian groups of order p^n: the partition count p(n)"""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0:
        raise ValueError("n must be >= 0")
    return int(partition(n))


def count_abelian_groups(order: int) -> int:
    if order < 1:
        raise ValueError("group orders are positive")
    return prod(int(partition(a)) for a in factorint(order).values())


def abelian_types_of_order(order: int) -> List[AbelianType]:
    """Every Abelian type of the given order, sorted by invariant factors"""
    if order < 1:
        raise ValueError("group orders are positive")
    per_prime = []
    for p, a in sorted(factorint(order).items()):
        options = []
        for part in partitions(a):
            options.append([p ** size for size, mult in part.items() for _ in range(mult)])
        per_prime.append(options)
    types = {AbelianType.from_cyclic_factors([f for chunk in combo for f in chunk])
             for combo in product(*per_prime)}
    return sorted(types, key=lambda t: (len(t.invariant_factors), t.invariant_factors))
