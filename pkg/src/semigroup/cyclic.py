"""
Cyclic Semigroups C_{m,n}
Index/period arithmetic on exponents and the Cayley table of <a>
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class CyclicType:
    """
    Type (m, n) of a cyclic semigroup: a^{m+n} = a^m with m, n minimal

    Exponents 1..m-1 form the tail, exponents m..m+n-1 the body (a cyclic
    group of order n).
    """

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"cyclic type needs m >= 1 and n >= 1, got ({self.m}, {self.n})")

    def __str__(self) -> str:
        return f"C({self.m},{self.n})"

    @property
    def order(self) -> int:
        return self.m + self.n - 1

    @property
    def idempotent_exponent(self) -> int:
        """The unique j in [m, m+n-1] with n | j"""
        return self.m + (-self.m) % self.n

    @property
    def tail(self) -> Tuple[int, ...]:
        return tuple(range(1, self.m))

    @property
    def body(self) -> Tuple[int, ...]:
        return tuple(range(self.m, self.m + self.n))

    def canonical(self, k: int) -> int:
        """Reduce a positive exponent into 1..m+n-1"""
        if k < 1:
            raise ValueError(f"exponents start at 1, got {k}")
        if k < self.m:
            return k
        return self.m + (k - self.m) % self.n

    def multiply(self, i: int, j: int) -> int:
        return self.canonical(i + j)


def cyclic_table(ctype: CyclicType) -> np.ndarray:
    """Table of C_{m,n} with id i-1 standing for a^i"""
    exps = np.arange(1, ctype.order + 1, dtype=np.int64)
    sums = exps[:, None] + exps[None, :]
    canon = np.where(sums < ctype.m, sums, ctype.m + (sums - ctype.m) % ctype.n)
    return canon - 1
