"""
Budgets and run configuration

All limits are explicit arguments or command-line flags; nothing is read from
the environment so that repeated runs are reproducible.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple


@dataclass(frozen=True)
class Budgets:
    """Resource limits for completion, tables and exhaustive searches"""

    max_rules: int = 10_000
    max_word_length: int = 64
    max_elements: int = 5_000
    search_budget: int = 200_000
    max_oracle_words: int = 200_000
    max_ground_set: int = 24

    def __post_init__(self):
        for name in ('max_rules', 'max_word_length', 'max_elements',
                     'search_budget', 'max_oracle_words', 'max_ground_set'):
            if getattr(self, name) <= 0:
                raise ValueError(f"budget {name} must be positive")


DEFAULT_BUDGETS = Budgets()

OUTPUT_FORMATS = ('text', 'json', 'dot')


@dataclass(frozen=True)
class RunConfig:
    """One command-line invocation"""

    subcommand: str
    inputs: Tuple[str, ...] = ()
    output_format: str = 'text'
    budgets: Budgets = field(default_factory=Budgets)
    emit_table: Optional[str] = None
    deterministic: bool = True

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format: {self.output_format}")
