"""
Ontological Components Package

Parses OID statements, translates them to description-logic axioms and computes
entailment-based meaning specifications with an embedded tableau reasoner.
"""

__version__ = "0.1.0"
