"""
Configuration package for ontocomp.

This package contains configuration classes and settings management
for the reasoner, the meaning engine and the command line.
"""

from config.settings import OntoCompConfig, DEFAULT_CONFIG

__all__ = [
    'OntoCompConfig',
    'DEFAULT_CONFIG'
]
