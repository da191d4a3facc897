"""
Command Line
File formats, report rendering and the subcommand frontend
"""

from .export import Report, render
from .formats import (parse_frame, parse_implications, parse_matrix, parse_presentation,
                      parse_table, write_table)
from .main import build_parser, main

__all__ = [
    'Report', 'render',
    'parse_frame', 'parse_implications', 'parse_matrix', 'parse_presentation',
    'parse_table', 'write_table',
    'build_parser', 'main',
]
