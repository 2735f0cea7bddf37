"""
Models package for ontocomp.

This package contains the value types of the ontological-component model,
the EBMS pipeline state, report models and JSON schemas.
"""

from models.terms import (
    Oid, LexicalUnit, ConceptExpr,
    Top, Bottom, Atom, NlAtom, Not, Exists, Forall, And, Or,
    normalize, render
)
from models.statements import (
    Indicator, Condition, OidStatement, Hri, Meta,
    OntologicalComponent, Collection, mentioned_oids
)
from models.axioms import Sub, Equiv, Tbox, render_axiom
from models.meaning import AnalyticTheory, Ebms
from models.state import MeaningState
from models.reports import (
    ImpactVerdict,
    DiffKind,
    EbmsOutput,
    StatementDelta,
    OidImpact,
    ImpactReport,
    DiffReport,
    ExportDocument
)
from models.schemas import EBMS_SCHEMA, EBMS_LIST_SCHEMA, IMPACT_SCHEMA, DIFF_SCHEMA, EXPORT_SCHEMA

__all__ = [
    # Terms
    'Oid', 'LexicalUnit', 'ConceptExpr',
    'Top', 'Bottom', 'Atom', 'NlAtom', 'Not', 'Exists', 'Forall', 'And', 'Or',
    'normalize', 'render',

    # Statements
    'Indicator', 'Condition', 'OidStatement', 'Hri', 'Meta',
    'OntologicalComponent', 'Collection', 'mentioned_oids',

    # Axioms
    'Sub', 'Equiv', 'Tbox', 'render_axiom',

    # Meaning
    'AnalyticTheory', 'Ebms', 'MeaningState',

    # Reports
    'ImpactVerdict',
    'DiffKind',
    'EbmsOutput',
    'StatementDelta',
    'OidImpact',
    'ImpactReport',
    'DiffReport',
    'ExportDocument',

    # Schemas
    'EBMS_SCHEMA',
    'EBMS_LIST_SCHEMA',
    'IMPACT_SCHEMA',
    'DIFF_SCHEMA',
    'EXPORT_SCHEMA'
]
