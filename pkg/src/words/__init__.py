"""
Words and Rewriting
Free commutative semigroups and Knuth-Bendix style completion
"""

from .free_words import (AugmentedWord, BoxCover, Word, count_words_of_length,
                         format_word, ideal_complement, military_cmp, parse_word)
from .rewriting import (CompletionResult, CriticalPair, Rule, RuleSystem, complete,
                        critical_pairs, enumerate_normal_forms, is_locally_confluent,
                        orient, reduce, thue_oracle)

__all__ = [
    'AugmentedWord', 'BoxCover', 'Word', 'count_words_of_length', 'format_word',
    'ideal_complement', 'military_cmp', 'parse_word',
    'CompletionResult', 'CriticalPair', 'Rule', 'RuleSystem', 'complete',
    'critical_pairs', 'enumerate_normal_forms', 'is_locally_confluent', 'orient',
    'reduce', 'thue_oracle',
]
