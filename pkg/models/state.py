"""
State definition for the meaning-specification workflow.

This module contains the TypedDict threaded through the EBMS pipeline
graph: asserted EBMS -> analytic theory -> coherence -> closure -> assembly.
"""

from typing import Optional, TypedDict

from models.axioms import Tbox
from models.meaning import AnalyticTheory, Ebms
from models.statements import Collection
from models.terms import Oid


class MeaningState(TypedDict, total=False):
    """State dictionary for one EBMS computation."""
    collection: Collection
    subject: Oid
    report_mode: bool
    asserted: frozenset  # asserted analytic entailments of the subject
    theory: Optional[AnalyticTheory]
    tbox: Optional[Tbox]  # translated analytic theory
    coherent: Optional[bool]
    inferred: frozenset  # closure members before assembly
    non_reverse_translatable: frozenset
    ebms: Optional[Ebms]
