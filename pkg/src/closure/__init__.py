"""
Closure Systems
Implication families, 012-row covers and relatively free semilattices
"""

from .implications import (ClosureCover, Implication, ImplicationBase, closure_cover,
                           embed_into_powerset, largest_fiber, rfsl, rfsl_from_base,
                           semilattice_relations_to_implications, sigma_closure)

__all__ = [
    'ClosureCover', 'Implication', 'ImplicationBase', 'closure_cover', 'embed_into_powerset',
    'largest_fiber', 'rfsl', 'rfsl_from_base', 'semilattice_relations_to_implications',
    'sigma_closure',
]
