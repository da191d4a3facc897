"""
Generating sets and isomorphism search between small commutative semigroups
"""

import logging
from collections import Counter
from typing import Dict, List, Optional, Tuple

import numpy as np

from .cayley import CayleySemigroup, cyclic_type, subsemigroup_generated

log = logging.getLogger(__name__)

Invariant = Tuple[int, int, bool, int]


def element_invariants(S: CayleySemigroup) -> List[Invariant]:
    """Per element: index, period, idempotency and |xS|"""
    out = []
    for x in range(S.size):
        data = cyclic_type(S, x)
        out.append((data.cyclic_type.m, data.cyclic_type.n, S.mul(x, x) == x,
                    len(np.unique(S.table[x, :]))))
    return out


def generating_set(S: CayleySemigroup) -> List[int]:
    """Greedy generators: repeatedly add the x whose <x> brings the most new elements"""
    covered: frozenset = frozenset()
    gens: List[int] = []
    powers = [set(cyclic_type(S, x).powers) for x in range(S.size)]
    while len(covered) < S.size:
        best = max(range(S.size), key=lambda x: (len(powers[x] - covered), -x))
        gens.append(best)
        covered = subsemigroup_generated(S, covered | {best})
    return gens


def _extend(S: CayleySemigroup, T: CayleySemigroup, fmap: Dict[int, int],
            s_inv: List[Invariant], t_inv: List[Invariant]) -> Optional[Dict[int, int]]:
    fmap = dict(fmap)
    inverse = {v: k for k, v in fmap.items()}
    queue = list(fmap)
    while queue:
        x = queue.pop()
        for y in list(fmap):
            z, w = S.mul(x, y), T.mul(fmap[x], fmap[y])
            if z in fmap:
                if fmap[z] != w:
                    return None
            elif w in inverse or s_inv[z] != t_inv[w]:
                return None
            else:
                fmap[z] = w
                inverse[w] = z
                queue.append(z)
    return fmap


def find_isomorphism(S: CayleySemigroup, T: CayleySemigroup) -> Optional[np.ndarray]:
    """
    Search for a bijection f with f(xy) = f(x)f(y)

    Generator images are restricted to elements with matching invariants and
    each partial assignment is closed under products before branching.

    Returns:
        Array f with f[x] the image of x, or None
    """
    if S.size != T.size:
        return None
    s_inv, t_inv = element_invariants(S), element_invariants(T)
    if Counter(s_inv) != Counter(t_inv):
        return None
    gens = generating_set(S)
    nodes = 0

    def search(i: int, fmap: Dict[int, int]) -> Optional[Dict[int, int]]:
        nonlocal nodes
        nodes += 1
        if i == len(gens):
            return fmap if len(fmap) == S.size else None
        g = gens[i]
        if g in fmap:
            return search(i + 1, fmap)
        used = set(fmap.values())
        for y in range(T.size):
            if y in used or t_inv[y] != s_inv[g]:
                continue
            extended = _extend(S, T, {**fmap, g: y}, s_inv, t_inv)
            if extended is not None:
                found = search(i + 1, extended)
                if found is not None:
                    return found
        return None

    found = search(0, {})
    log.debug("isomorphism search visited %d nodes", nodes)
    if found is None:
        return None
    f = np.array([found[x] for x in range(S.size)], dtype=np.int64)
    if not np.array_equal(f[S.table], T.table[np.ix_(f, f)]):
        return None
    return f


def is_isomorphic(S: CayleySemigroup, T: CayleySemigroup) -> bool:
    return find_isomorphism(S, T) is not None
