"""
DL bridge package.

Translates OID statements to description-logic axioms and back, and reifies
general class axioms into dedicated ontological components.
"""

from bridge.translation import (
    NotReverseTranslatable,
    translate,
    translate_theory,
    reverse_translate,
    term_centered_statements,
    is_general_axiom
)
from bridge.reification import Side, ReificationError, reify_general_axiom

__all__ = [
    'NotReverseTranslatable',
    'translate',
    'translate_theory',
    'reverse_translate',
    'term_centered_statements',
    'is_general_axiom',
    'Side',
    'ReificationError',
    'reify_general_axiom'
]
