"""
Groups and Morphisms
Abelian group types, cyclic-semigroup morphisms and ideal extensions
"""

from .abelian import (AbelianType, order_statistics_type, rfag_type, smith_normal_form,
                      tmin_tmax, count_abelian_groups_of_order)
from .cyclic_hom import (ExqSet, Frame, FrameEdge, build_strong_semilattice, compose_exq,
                         count_strong_semilattices, exq, is_morphism_exponent,
                         is_strong_decomposition)
from .ideal_extension import Quintuple, classify, is_realizable, is_strongly_realizable, realize

__all__ = [
    'AbelianType', 'order_statistics_type', 'rfag_type', 'smith_normal_form', 'tmin_tmax',
    'count_abelian_groups_of_order',
    'ExqSet', 'Frame', 'FrameEdge', 'build_strong_semilattice', 'compose_exq',
    'count_strong_semilattices', 'exq', 'is_morphism_exponent', 'is_strong_decomposition',
    'Quintuple', 'classify', 'is_realizable', 'is_strongly_realizable', 'realize',
]
