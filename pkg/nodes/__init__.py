"""
Nodes package for the meaning engine.

This package contains the workflow nodes of the EBMS pipeline: asserted
EBMS, analytic theory, coherence check, deductive closure and assembly.
"""

from nodes.theory import (
    is_analytic_entailment, asserted_ebms, analytic_theory, asserted_node, theory_node
)
from nodes.coherence import coherence_node, route_after_coherence
from nodes.closure import (
    CandidateBudgetExceeded, candidate_characterizations, infer_statements,
    non_reverse_translatable, closure_node
)
from nodes.assembly import dedupe_inferred, assemble_node

__all__ = [
    # Theory nodes
    'is_analytic_entailment',
    'asserted_ebms',
    'analytic_theory',
    'asserted_node',
    'theory_node',

    # Coherence nodes
    'coherence_node',
    'route_after_coherence',

    # Closure nodes
    'CandidateBudgetExceeded',
    'candidate_characterizations',
    'infer_statements',
    'non_reverse_translatable',
    'closure_node',

    # Assembly nodes
    'dedupe_inferred',
    'assemble_node'
]
