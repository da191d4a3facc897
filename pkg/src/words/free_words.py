"""
Free Commutative Semigroup F_k
Exponent-vector words with divisibility, lcm, military order and ideal complements
"""

import logging
import re
from dataclasses import dataclass
from itertools import chain, combinations_with_replacement, product
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from scipy.special import comb

from ..errors import DimensionError, ExponentOverflowError

log = logging.getLogger(__name__)

# Exponents behave like unsigned 64-bit counters; anything larger is reported.
MAX_EXPONENT = 2 ** 63 - 1

Interval = Tuple[int, int]
Box = Tuple[Interval, ...]


@dataclass(frozen=True, eq=False)
class AugmentedWord:
    """Element of F_k^1: an exponent vector that may be all zero (the identity)"""

    exponents: Tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, 'exponents', exponents)
        if not exponents:
            raise DimensionError("a word needs at least one generator (k >= 1)")
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent in {exponents}")
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, AugmentedWord):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_word(self)})"

    @property
    def k(self) -> int:
        return len(self.exponents)

    @property
    def length(self) -> int:
        """|w|, the sum of the exponents"""
        return sum(self.exponents)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    @property
    def is_identity(self) -> bool:
        return not any(self.exponents)

    @property
    def military_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Sort key realizing the military order (length, then a_1 before a_2 ...)"""
        return (self.length, tuple(-e for e in self.exponents))

    def _check_k(self, other: 'AugmentedWord'):
        if self.k != other.k:
            raise DimensionError(f"generator counts differ: {self.k} vs {other.k}",
                                 witness=(self.exponents, other.exponents))

    def __mul__(self, other: 'AugmentedWord') -> 'AugmentedWord':
        self._check_k(other)
        return make_word(a + b for a, b in zip(self.exponents, other.exponents))

    def divides(self, other: 'AugmentedWord') -> bool:
        """Component-wise order v <=_c w"""
        self._check_k(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def quotient(self, divisor: 'AugmentedWord') -> 'AugmentedWord':
        """The unique u in F_k^1 with divisor * u = self"""
        if not divisor.divides(self):
            raise ValueError("divisor does not divide the word")
        return make_word(a - b for a, b in zip(self.exponents, divisor.exponents))

    def lcm(self, other: 'AugmentedWord') -> 'AugmentedWord':
        self._check_k(other)
        return make_word(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def overlaps(self, other: 'AugmentedWord') -> bool:
        """True when the two supports share a generator"""
        self._check_k(other)
        return any(a and b for a, b in zip(self.exponents, other.exponents))


@dataclass(frozen=True, eq=False)
class Word(AugmentedWord):
    """Element of F_k; the empty word is excluded"""

    def __post_init__(self):
        super().__post_init__()
        if not any(self.exponents):
            raise ValueError("the empty word is not an element of F_k")


def make_word(exponents: Iterable[int]) -> AugmentedWord:
    """Build a Word, or the AugmentedWord identity when all exponents vanish"""
    exponents = tuple(exponents)
    if any(exponents):
        return Word(exponents)
    return AugmentedWord(exponents)


def generator_word(i: int, k: int, power: int = 1) -> Word:
    """The word a_i^power in F_k"""
    exponents = [0] * k
    exponents[i] = power
    return Word(tuple(exponents))


def mul(v: AugmentedWord, w: AugmentedWord) -> AugmentedWord:
    return v * w


def divides(v: AugmentedWord, w: AugmentedWord) -> bool:
    return v.divides(w)


def lcm(v: AugmentedWord, w: AugmentedWord) -> AugmentedWord:
    return v.lcm(w)


def military_cmp(v: AugmentedWord, w: AugmentedWord) -> int:
    """
    Compare two words in military order

    Returns:
        -1 if v <_M w, 0 if equal, 1 if v >_M w
    """
    v._check_k(w)
    kv, kw = v.military_key, w.military_key
    if kv < kw:
        return -1
    if kv > kw:
        return 1
    return 0


def military_sorted(words: Iterable[AugmentedWord]) -> List[AugmentedWord]:
    return sorted(words, key=lambda w: w.military_key)


def count_words_of_length(n: int, k: int) -> int:
    """
    Number of words of length n in F_k

    Args:
        n: Word length (>= 1)
        k: Generator count (>= 1)

    Returns:
        binomial(n + k - 1, n), computed exactly
    """
    if n < 1 or k < 1:
        raise ValueError("count_words_of_length needs n >= 1 and k >= 1")
    return int(comb(n + k - 1, n, exact=True))


def words_of_length(n: int, k: int) -> Iterator[Word]:
    """All words of length n, already in military order"""
    for combo in combinations_with_replacement(range(k), n):
        exponents = [0] * k
        for i in combo:
            exponents[i] += 1
        yield Word(tuple(exponents))


def words_up_to_length(bound: int, k: int) -> Iterator[Word]:
    return chain.from_iterable(words_of_length(n, k) for n in range(1, bound + 1))


# Text syntax: juxtaposed name^exp tokens, e.g. "a^2 b c^3" or "a^2bc^3"

_EXPONENT = re.compile(r'\^(\d+)')


def parse_word(text: str, names: Sequence[str], allow_identity: bool = False) -> AugmentedWord:
    """
    Parse a word over the given generator names

    Args:
        text: e.g. "a^2 b c^3"; "1" denotes the identity when allowed
        names: Generator names in declaration order
        allow_identity: Accept the empty word "1"

    Returns:
        The parsed word
    """
    compact = text.replace(' ', '').replace('\t', '')
    exponents = [0] * len(names)
    if compact == '1':
        if not allow_identity:
            raise ValueError("the identity '1' is not a word of F_k")
        return AugmentedWord(tuple(exponents))
    if not compact:
        raise ValueError("empty word text")

    by_length = sorted(enumerate(names), key=lambda item: -len(item[1]))
    pos = 0
    while pos < len(compact):
        for index, name in by_length:
            if compact.startswith(name, pos):
                pos += len(name)
                power = 1
                match = _EXPONENT.match(compact, pos)
                if match:
                    power = int(match.group(1))
                    pos = match.end()
                exponents[index] += power
                break
        else:
            raise ValueError(f"unknown generator at '{compact[pos:]}' in '{text}'")
    return make_word(exponents)


def format_word(w: AugmentedWord, names: Optional[Sequence[str]] = None) -> str:
    """Render a word, e.g. ab^2c; generators default to a, b, c, ..."""
    if names is None:
        names = default_names(w.k)
    if w.is_identity:
        return '1'
    parts = []
    for name, e in zip(names, w.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    joiner = '' if all(len(name) == 1 for name in names) else ' '
    return joiner.join(parts)


def default_names(k: int) -> Tuple[str, ...]:
    if k <= 26:
        return tuple(chr(ord('a') + i) for i in range(k))
    return tuple(f"x{i + 1}" for i in range(k))


@dataclass(frozen=True)
class BoxCover:
    """
    Disjoint union of boxes of exponent vectors

    Each box fixes an interval [lo..hi] per generator; a fixed exponent is the
    interval [e..e]. The all-zero vector is never counted as a word.
    """

    k: int
    boxes: Tuple[Box, ...] = ()
    finite: bool = True
    disjoint: bool = True

    @property
    def cardinality(self) -> Optional[int]:
        if not self.finite:
            return None
        total = 0
        for box in self.boxes:
            size = 1
            for lo, hi in box:
                size *= hi - lo + 1
            total += size
            if all(lo == 0 for lo, _ in box):
                total -= 1
        return total

    def contains(self, w: AugmentedWord) -> bool:
        if w.is_identity:
            return False
        return any(all(lo <= e <= hi for e, (lo, hi) in zip(w.exponents, box))
                   for box in self.boxes)

    def expand(self) -> List[Word]:
        """Every word of the represented set, military-sorted"""
        if not self.finite:
            raise ValueError("cannot expand an infinite complement")
        words = []
        for box in self.boxes:
            for exponents in product(*(range(lo, hi + 1) for lo, hi in box)):
                if any(exponents):
                    words.append(Word(exponents))
        return military_sorted(words)


def _common_k(words: Sequence[AugmentedWord]) -> int:
    k = words[0].k
    for w in words[1:]:
        if w.k != k:
            raise DimensionError(f"generator counts differ: {k} vs {w.k}")
    return k


def is_complement_finite(generators: Sequence[AugmentedWord]) -> bool:
    """F_k minus the ideal is finite iff every generator has a pure power in it"""
    k = _common_k(generators)
    return all(any(g.support == (i,) for g in generators) for i in range(k))


def ideal_complement(generators: Sequence[AugmentedWord]) -> BoxCover:
    """
    Compress {w in F_k : no generator divides w} into disjoint boxes

    Args:
        generators: Non-empty list of ideal generators over a shared k

    Returns:
        BoxCover; `finite` is False (and boxes empty) for infinite complements
    """
    if not generators:
        raise ValueError("ideal_complement needs at least one generator")
    k = _common_k(generators)
    if not is_complement_finite(generators):
        log.debug("complement of %d generators is infinite", len(generators))
        return BoxCover(k=k, finite=False)

    bounds = []
    for i in range(k):
        pure = min(g.exponents[i] for g in generators if g.support == (i,))
        bounds.append((0, pure - 1))
    gens = [g.exponents for g in generators]

    boxes: List[Box] = []
    _split(tuple(bounds), gens, boxes)
    boxes = [box for box in boxes if any(hi for _, hi in box)]
    log.debug("ideal complement compressed into %d boxes", len(boxes))
    return BoxCover(k=k, boxes=tuple(boxes))


def _split(box: Box, gens: List[Tuple[int, ...]], out: List[Box]):
    k = len(box)
    relevant = [g for g in gens if all(g[j] <= box[j][1] for j in range(k))]
    if not relevant:
        out.append(box)
        return
    low = [lo for lo, _ in box]
    if any(all(g[j] <= low[j] for j in range(k)) for g in relevant):
        return  # whole box lies in the ideal

    i = next(j for j in range(k) if any(g[j] > low[j] for g in relevant))
    lo, hi = box[i]
    cuts = sorted({g[i] for g in relevant if lo < g[i] <= hi})
    edges = [lo] + cuts + [hi + 1]
    for start, stop in zip(edges, edges[1:]):
        sub = box[:i] + ((start, stop - 1),) + box[i + 1:]
        _split(sub, relevant, out)
