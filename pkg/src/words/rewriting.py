"""
Commutative Rewriting Systems
Orientation, reduction, critical pairs, completion and the Thue-congruence oracle
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..config import Budgets, DEFAULT_BUDGETS
from ..errors import (BudgetExceededError, DegenerateRelationError, DimensionError,
                      InfiniteSemigroupError, OrientationError)
from .free_words import (AugmentedWord, Word, format_word, ideal_complement,
                         military_cmp, words_up_to_length)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Rule:
    """Oriented relation lhs -> rhs with rhs military-smaller than lhs"""

    lhs: Word
    rhs: Word

    def __post_init__(self):
        if self.lhs.k != self.rhs.k:
            raise DimensionError("rule sides live in different F_k")
        if military_cmp(self.rhs, self.lhs) >= 0:
            raise OrientationError(
                "rule must point from military-larger to military-smaller",
                witness=(format_word(self.lhs), format_word(self.rhs)))

    def apply(self, w: AugmentedWord) -> Optional[AugmentedWord]:
        """One rewrite step at the (unique) commutative position, or None"""
        if not self.lhs.divides(w):
            return None
        return w.quotient(self.lhs) * self.rhs

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        return f"{format_word(self.lhs, names)} -> {format_word(self.rhs, names)}"


@dataclass(frozen=True)
class RuleSystem:
    """Presentation of RFCS(generators : rules)"""

    generators: Tuple[str, ...]
    rules: Tuple[Rule, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'generators', tuple(self.generators))
        object.__setattr__(self, 'rules', tuple(self.rules))
        if not self.generators:
            raise DimensionError("a presentation needs at least one generator")
        if len(set(self.generators)) != len(self.generators):
            raise ValueError(f"duplicate generator names: {self.generators}")
        for rule in self.rules:
            if rule.lhs.k != self.k:
                raise DimensionError(f"rule {rule.format()} does not match k={self.k}")
        if len(set(self.rules)) != len(self.rules):
            raise ValueError("duplicate rules in presentation")

    @property
    def k(self) -> int:
        return len(self.generators)

    def with_rules(self, rules: Iterable[Rule]) -> 'RuleSystem':
        return RuleSystem(self.generators, tuple(rules))

    def format_rules(self) -> List[str]:
        return [rule.format(self.generators) for rule in self.rules]


@dataclass(frozen=True)
class CriticalPair:
    """The two one-step reducts of lcm(lhs_i, lhs_j)"""

    overlap: Word
    left_result: Word
    right_result: Word
    rule_indices: Tuple[int, int] = (0, 0)


@dataclass(frozen=True)
class CompletionResult:
    """Outcome of a completion run"""

    system: RuleSystem
    added: Tuple[Rule, ...] = ()
    removed: Tuple[Rule, ...] = ()
    rounds: int = 0


def orient(relations: Iterable[Tuple[Word, Word]],
           generators: Optional[Sequence[str]] = None) -> RuleSystem:
    """
    Direct each relation from its military-larger to its military-smaller side

    Args:
        relations: Pairs (u, v) standing for u = v
        generators: Generator names (default a, b, c, ...)

    Returns:
        RuleSystem with duplicates removed (first occurrence kept)
    """
    relations = list(relations)
    rules: List[Rule] = []
    for u, v in relations:
        rule = orient_pair(u, v)
        if rule not in rules:
            rules.append(rule)
    if generators is None:
        if not relations:
            raise ValueError("generator names are required for an empty relation list")
        from .free_words import default_names
        generators = default_names(relations[0][0].k)
    return RuleSystem(tuple(generators), tuple(rules))


def orient_pair(u: Word, v: Word) -> Rule:
    order = military_cmp(u, v)
    if order == 0:
        raise DegenerateRelationError("relation has equal sides",
                                      witness=format_word(u))
    return Rule(u, v) if order > 0 else Rule(v, u)


def _reduce(w: AugmentedWord, rules: Sequence[Rule]) -> AugmentedWord:
    current = w
    changed = True
    while changed:
        changed = False
        for rule in rules:
            if rule.lhs.divides(current):
                current = current.quotient(rule.lhs) * rule.rhs
                changed = True
                break
    return current


def reduce(w: AugmentedWord, rs: RuleSystem) -> AugmentedWord:
    """
    Rewrite w until no rule applies

    At every step the first applicable rule in system order is used, so the
    result (and the chain leading to it) is deterministic.
    """
    if w.k != rs.k:
        raise DimensionError(f"word has k={w.k}, presentation has k={rs.k}")
    return _reduce(w, rs.rules)


def reduce_trace(w: AugmentedWord, rs: RuleSystem) -> List[AugmentedWord]:
    """The full rewrite chain w = w_0 -> w_1 -> ... -> normal form"""
    chain = [w]
    current = w
    while True:
        for rule in rs.rules:
            step = rule.apply(current)
            if step is not None:
                current = step
                chain.append(current)
                break
        else:
            return chain


def _critical_pairs(rules: Sequence[Rule]) -> List[CriticalPair]:
    pairs = []
    for i in range(len(rules)):
        for j in range(i + 1, len(rules)):
            first, second = rules[i], rules[j]
            if not first.lhs.overlaps(second.lhs):
                continue  # disjoint premises always join
            overlap = first.lhs.lcm(second.lhs)
            pairs.append(CriticalPair(overlap=overlap,
                                      left_result=first.apply(overlap),
                                      right_result=second.apply(overlap),
                                      rule_indices=(i, j)))
    return pairs


def critical_pairs(rs: RuleSystem) -> List[CriticalPair]:
    """One critical pair per unordered rule pair with overlapping premises"""
    return _critical_pairs(rs.rules)


def is_locally_confluent(rs: RuleSystem) -> Tuple[bool, Optional[CriticalPair]]:
    """
    Check every critical pair for a common normal form

    Returns:
        (True, None) or (False, first failing pair in military order of overlap)
    """
    pairs = sorted(_critical_pairs(rs.rules),
                   key=lambda p: (p.overlap.military_key, p.rule_indices))
    for pair in pairs:
        if _reduce(pair.left_result, rs.rules) != _reduce(pair.right_result, rs.rules):
            return False, pair
    return True, None


def _interreduce(rules: List[Rule]) -> List[Rule]:
    """Drop rules whose lhs another rule rewrites, re-adding what they still say"""
    rules = list(rules)
    while True:
        victim = None
        for i, rule in enumerate(rules):
            for j, other in enumerate(rules):
                if i != j and other.lhs.divides(rule.lhs) and (other.lhs != rule.lhs or j < i):
                    victim = i
                    break
            if victim is not None:
                break
        if victim is None:
            break
        dropped = rules.pop(victim)
        left, right = _reduce(dropped.lhs, rules), _reduce(dropped.rhs, rules)
        log.debug("dropping superfluous rule %s", dropped.format())
        if left != right:
            rules.append(orient_pair(left, right))

    for i, rule in enumerate(rules):
        rhs = _reduce(rule.rhs, rules)
        if rhs != rule.rhs:
            rules[i] = Rule(rule.lhs, rhs)
    return rules


def _check_budgets(rs: RuleSystem, rules: List[Rule], rounds: int, budgets: Budgets) -> None:
    """Raise BudgetExceededError when the working rule set outgrows the budgets"""
    longest = max(rules, key=lambda rule: rule.lhs.length, default=None)
    if longest is None:
        return
    if longest.lhs.length > budgets.max_word_length or len(rules) > budgets.max_rules:
        raise BudgetExceededError(
            f"completion exceeded budget after {rounds} rounds "
            f"({len(rules)} rules, max rules {budgets.max_rules}, "
            f"max word length {budgets.max_word_length})",
            witness=longest.format(rs.generators),
            partial=rs.with_rules(rules))


def complete_with_report(rs: RuleSystem, budgets: Budgets = DEFAULT_BUDGETS) -> CompletionResult:
    """
    Complete a presentation into a locally confluent one

    Critical pairs are processed in military order of their overlap; the first
    pair that fails to join adds the rule reduce(larger) -> reduce(smaller),
    followed by inter-reduction.

    Args:
        rs: Presentation to complete
        budgets: max_rules and max_word_length guard runaway inputs

    Returns:
        CompletionResult with the completed system and the rule bookkeeping
    """
    rules = _interreduce(list(rs.rules))
    rounds = 0
    _check_budgets(rs, rules, rounds, budgets)
    while True:
        pairs = sorted(_critical_pairs(rules),
                       key=lambda p: (p.overlap.military_key, p.rule_indices))
        unjoined = None
        for pair in pairs:
            left = _reduce(pair.left_result, rules)
            right = _reduce(pair.right_result, rules)
            if left != right:
                unjoined = (left, right)
                break
        if unjoined is None:
            break

        rounds += 1
        new_rule = orient_pair(*unjoined)
        log.debug("round %d: adding %s", rounds, new_rule.format(rs.generators))
        rules.append(new_rule)
        rules = _interreduce(rules)
        _check_budgets(rs, rules, rounds, budgets)

    _check_budgets(rs, rules, rounds, budgets)
    system = rs.with_rules(rules)
    added = tuple(rule for rule in rules if rule not in rs.rules)
    removed = tuple(rule for rule in rs.rules if rule not in rules)
    log.info("completion finished after %d rounds: %d rules (%d added, %d removed)",
             rounds, len(rules), len(added), len(removed))
    return CompletionResult(system=system, added=added, removed=removed, rounds=rounds)


def complete(rs: RuleSystem, budgets: Budgets = DEFAULT_BUDGETS) -> RuleSystem:
    return complete_with_report(rs, budgets).system


def normal_form_count(rs: RuleSystem) -> Optional[int]:
    """|NF| for a completed system, None when infinite"""
    if not rs.rules:
        return None
    return ideal_complement([rule.lhs for rule in rs.rules]).cardinality


def enumerate_normal_forms(rs: RuleSystem, limit: Optional[int] = None) -> List[Word]:
    """
    All words divisible by no lhs, military-sorted

    The caller completes the system first; then these words are in bijection
    with the elements of RFCS(generators : rules).

    Raises:
        InfiniteSemigroupError: some generator has no pure power among the lhs
        BudgetExceededError: more than `limit` normal forms
    """
    if not rs.rules:
        raise InfiniteSemigroupError("no relations: the semigroup is free and infinite")
    cover = ideal_complement([rule.lhs for rule in rs.rules])
    if not cover.finite:
        raise InfiniteSemigroupError("normal-form set is infinite",
                                     witness="a generator lacks a pure-power rule")
    if limit is not None and cover.cardinality > limit:
        raise BudgetExceededError(
            f"{cover.cardinality} normal forms exceed the element budget {limit}")
    return cover.expand()


@dataclass(frozen=True)
class ThuePartition:
    """Connected components of the rewriting digraph on words of bounded length"""

    generators: Tuple[str, ...]
    length_bound: int
    classes: Tuple[Tuple[Word, ...], ...]
    irreducible: frozenset = field(default_factory=frozenset)

    def class_index(self) -> Dict[Word, int]:
        return {w: i for i, members in enumerate(self.classes) for w in members}

    def is_church_rosser(self) -> bool:
        """Every class holds exactly one irreducible word"""
        return all(sum(1 for w in members if w in self.irreducible) == 1
                   for members in self.classes)


def thue_oracle(rs: RuleSystem, length_bound: int,
                max_words: int = DEFAULT_BUDGETS.max_oracle_words) -> ThuePartition:
    """
    Brute-force Thue classes of all words of length <= length_bound

    Arcs w -> w' join w = lhs*v and w' = rhs*v; since |rhs| <= |lhs| every arc
    stays inside the enumerated set.

    Args:
        rs: Any presentation (completion not required)
        length_bound: Maximal word length enumerated
        max_words: Vertex budget

    Returns:
        ThuePartition with classes sorted by their military-least member
    """
    if length_bound < 1:
        raise ValueError("length_bound must be >= 1")
    words = list(words_up_to_length(length_bound, rs.k))
    if len(words) > max_words:
        raise BudgetExceededError(
            f"{len(words)} words of length <= {length_bound} exceed budget {max_words}")
    index = {w: i for i, w in enumerate(words)}

    rows, cols = [], []
    irreducible = set()
    for i, w in enumerate(words):
        has_arc = False
        for rule in rs.rules:
            target = rule.apply(w)
            if target is not None:
                rows.append(i)
                cols.append(index[target])
                has_arc = True
        if not has_arc:
            irreducible.add(w)

    n = len(words)
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    n_classes, labels = connected_components(graph, directed=True, connection='weak')
    buckets: List[List[Word]] = [[] for _ in range(n_classes)]
    for w, label in zip(words, labels):
        buckets[label].append(w)  # words are enumerated in military order
    classes = sorted((tuple(b) for b in buckets), key=lambda c: c[0].military_key)
    log.debug("thue oracle: %d words, %d classes", n, len(classes))
    return ThuePartition(generators=rs.generators, length_bound=length_bound,
                         classes=tuple(classes), irreducible=frozenset(irreducible))
