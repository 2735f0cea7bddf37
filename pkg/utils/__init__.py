"""
Utilities package for ontocomp.

This package contains status output, text rendering of meaning
specifications and reports, and collection export.
"""

from utils.console import status
from utils.rendering import INCOHERENT_BANNER, render_theory, render_ebms, render_diff, render_impact
from utils.export import IriMinter, class_expression, export_owl_functional, export_document, export_json

__all__ = [
    # Status output
    'status',

    # Rendering
    'INCOHERENT_BANNER',
    'render_theory',
    'render_ebms',
    'render_diff',
    'render_impact',

    # Export
    'IriMinter',
    'class_expression',
    'export_owl_functional',
    'export_document',
    'export_json'
]
