"""
The Multiplicative Semigroup (Z_n, *)
Units, Chinese remaindering, idempotents and arithmetic prediction of the Archimedean components
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import gcd, prod
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint, totient

from ..algebra.abelian import AbelianType
from ..config import DEFAULT_BUDGETS
from ..errors import BudgetExceededError
from .cayley import CayleySemigroup

log = logging.getLogger(__name__)


def _check_modulus(n: int):
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")


def zn_semigroup(n: int, max_elements: int = DEFAULT_BUDGETS.max_elements) -> CayleySemigroup:
    """Cayley table t[i][j] = ij mod n"""
    _check_modulus(n)
    if n > max_elements:
        raise BudgetExceededError(f"Z_{n} exceeds the element budget {max_elements}")
    r = np.arange(n, dtype=np.int64)
    return CayleySemigroup(np.outer(r, r) % n, validate=False)


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)"""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def inverse_mod(x: int, n: int) -> Optional[int]:
    """Inverse of x in Z_n, or None when gcd(x, n) > 1"""
    g, a, _ = extended_gcd(x % n, n)
    if g != 1:
        return None
    return a % n


def units_zn(n: int) -> FrozenSet[int]:
    _check_modulus(n)
    return frozenset(x for x in range(1, n) if gcd(x, n) == 1)


def phi(n: int) -> int:
    return int(totient(n))


def nonzerodivisors(n: int) -> FrozenSet[int]:
    """x with xy = 0 only for y = 0"""
    _check_modulus(n)
    r = np.arange(n, dtype=np.int64)
    zero_hits = (np.outer(r, r[1:]) % n) == 0
    return frozenset(np.flatnonzero(~np.any(zero_hits, axis=1)).tolist())


def is_squarefree(n: int) -> bool:
    return all(a == 1 for a in factorint(n).values())


@dataclass(frozen=True)
class PrimePower:
    p: int
    gamma: int

    @property
    def q(self) -> int:
        return self.p ** self.gamma


def factor_prime_powers(n: int) -> List[PrimePower]:
    """Prime-power parts of n sorted by their value (60 -> 3, 4, 5)"""
    _check_modulus(n)
    return sorted((PrimePower(p, a) for p, a in factorint(n).items()), key=lambda pp: pp.q)


def unit_group_type(n: int) -> AbelianType:
    """
    Z_n^inv as a product over prime-power parts

    Z_{p^g}^inv is cyclic of order (p-1)p^{g-1} for odd p; for powers of two
    Z_2^inv is trivial, Z_4^inv = C_2 and Z_{2^g}^inv = C_2 x C_{2^{g-2}} for g >= 3.
    """
    factors: List[int] = []
    for part in factor_prime_powers(n):
        if part.p != 2:
            factors.append((part.p - 1) * part.p ** (part.gamma - 1))
        elif part.gamma == 2:
            factors.append(2)
        elif part.gamma >= 3:
            factors.extend([2, 2 ** (part.gamma - 2)])
    return AbelianType.from_cyclic_factors(factors)


@dataclass(frozen=True)
class CrtContext:
    """Z_n = Z_{q_1} x ... x Z_{q_t} as rings, with basis e_i = 1 at q_i and 0 elsewhere"""

    n: int
    parts: Tuple[PrimePower, ...]
    basis: Tuple[int, ...]

    @property
    def moduli(self) -> Tuple[int, ...]:
        return tuple(part.q for part in self.parts)

    def decompose(self, x: int) -> Tuple[int, ...]:
        return tuple(x % q for q in self.moduli)

    def recompose(self, residues: Sequence[int]) -> int:
        if len(residues) != len(self.basis):
            raise ValueError(f"expected {len(self.basis)} residues, got {len(residues)}")
        return sum(a * e for a, e in zip(residues, self.basis)) % self.n


def crt_context(n: int) -> CrtContext:
    """Basis element e_i = c * (c^-1 mod q_i) with c = n / q_i"""
    parts = tuple(factor_prime_powers(n))
    basis = []
    for part in parts:
        c = n // part.q
        basis.append(c * inverse_mod(c % part.q, part.q) % n)
    return CrtContext(n=n, parts=parts, basis=tuple(basis))


def idempotents_zn(n: int) -> FrozenSet[int]:
    """The 2^t idempotents, recomposed from 0/1 residue vectors"""
    ctx = crt_context(n)
    return frozenset(ctx.recompose(bits) for bits in product((0, 1), repeat=len(ctx.parts)))


@dataclass(frozen=True)
class ZnComponent:
    """Archimedean component A_e of Z_n predicted from the CRT signature of e"""

    idempotent: int
    signature: Tuple[int, ...]        # 1 where e is a unit part, 0 where nil part
    size: int
    kernel_size: int
    kernel_type: AbelianType
    nil_sizes: Tuple[int, ...]
    elements: Optional[FrozenSet[int]] = None
    kernel: Optional[FrozenSet[int]] = None

    @property
    def is_group(self) -> bool:
        return self.size == self.kernel_size


def component_report(n: int, max_elements: int = DEFAULT_BUDGETS.max_elements) -> List[ZnComponent]:
    """
    Archimedean components of Z_n computed arithmetically

    x lies in A_e iff its residue is a unit at every unit part of e and
    divisible by p at every nil part; element sets are only listed for
    n <= max_elements.

    Returns:
        Components ordered by idempotent
    """
    ctx = crt_context(n)
    materialize = n <= max_elements
    residues = ctx.decompose
    out = []
    for bits in product((0, 1), repeat=len(ctx.parts)):
        e = ctx.recompose(bits)
        size = prod(phi(part.q) if bit else part.p ** (part.gamma - 1)
                    for part, bit in zip(ctx.parts, bits))
        kernel_size = prod(phi(part.q) for part, bit in zip(ctx.parts, bits) if bit)
        kernel_type = _product_type(unit_group_type(part.q)
                                    for part, bit in zip(ctx.parts, bits) if bit)
        nil_sizes = tuple(part.p ** (part.gamma - 1) for part, bit in zip(ctx.parts, bits) if not bit)

        elements = kernel = None
        if materialize:
            def belongs(x: int, in_kernel: bool) -> bool:
                for part, bit, r in zip(ctx.parts, bits, residues(x)):
                    if bit and gcd(r, part.p) != 1:
                        return False
                    if not bit and (r != 0 if in_kernel else r % part.p != 0):
                        return False
                return True
            elements = frozenset(x for x in range(n) if belongs(x, False))
            kernel = frozenset(x for x in elements if belongs(x, True))
        out.append(ZnComponent(idempotent=e, signature=bits, size=size, kernel_size=kernel_size,
                               kernel_type=kernel_type, nil_sizes=nil_sizes,
                               elements=elements, kernel=kernel))
    out.sort(key=lambda c: c.idempotent)
    log.debug("Z_%d: %d components, sizes %s", n, len(out), [c.size for c in out])
    return out


def _product_type(types) -> AbelianType:
    return AbelianType.from_cyclic_factors(f for t in types for f in t.invariant_factors)


def generators_of_cyclic_group(S: CayleySemigroup, identity: int,
                               elements: Sequence[int]) -> List[int]:
    """Elements whose powers exhaust the given group"""
    members = set(elements)
    gens = []
    for x in sorted(members):
        seen = {x}
        power = x
        while power != identity:
            power = S.mul(power, x)
            seen.add(power)
        if seen == members:
            gens.append(x)
    return gens
