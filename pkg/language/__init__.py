"""
Statement language package.

Parses and serializes concept expressions, OID statements, OC statements and
``.ocs`` collection files.
"""

from language.lexer import ConceptSyntaxError
from language.parser import parse_concept, parse_axiom
from language.statements import ParseDiagnostic, Severity, parse_statement
from language.collection import parse_collection
from language.serializer import serialize_statement, serialize_collection

__all__ = [
    'ConceptSyntaxError',
    'ParseDiagnostic',
    'Severity',
    'parse_concept',
    'parse_axiom',
    'parse_statement',
    'parse_collection',
    'serialize_statement',
    'serialize_collection'
]
