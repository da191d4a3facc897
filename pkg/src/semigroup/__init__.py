"""
Finite Commutative Semigroups
Cayley tables, congruences, structure classification and (Z_n, *)
"""

from .cyclic import CyclicType, cyclic_table
from .cayley import (CayleySemigroup, CongruencePartition, direct_product, from_presentation,
                     from_table, idempotents, j_classes, kernel, rees_quotient, units)
from .isomorphism import find_isomorphism, generating_set, is_isomorphic
from .structure import StructureReport, archimedean_components, nil_poset, structure_report
from .zn import CrtContext, component_report, crt_context, unit_group_type, zn_semigroup

__all__ = [
    'CyclicType', 'cyclic_table',
    'CayleySemigroup', 'CongruencePartition', 'direct_product', 'from_presentation',
    'from_table', 'idempotents', 'j_classes', 'kernel', 'rees_quotient', 'units',
    'find_isomorphism', 'generating_set', 'is_isomorphic',
    'StructureReport', 'archimedean_components', 'nil_poset', 'structure_report',
    'CrtContext', 'component_report', 'crt_context', 'unit_group_type', 'zn_semigroup',
]
