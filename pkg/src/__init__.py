"""
Finite Commutative Semigroup Toolkit
Completion, Cayley tables, structure reports, Z_n, ideal extensions, closure systems
"""

__version__ = "0.3.0"
