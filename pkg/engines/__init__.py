"""
Engines package for ontocomp.

This package contains the tableau reasoner and its truth-table oracle. The
orchestrating engines (``engines.meaning``, ``engines.impact``,
``engines.versioning``) build on the ``nodes`` package and are imported from
their own modules.
"""

from engines.tableau import (
    SatOutcome,
    ReasonerBudgetExceeded,
    TableauReasoner,
    internalize,
    is_satisfiable,
    entails,
    is_tautology
)
from engines.oracle import (
    MAX_ATOMS,
    OracleInputError,
    evaluate,
    oracle_entails,
    oracle_equivalent,
    oracle_satisfiable,
    TruthTableOracle
)

__all__ = [
    # Tableau reasoner
    'SatOutcome',
    'ReasonerBudgetExceeded',
    'TableauReasoner',
    'internalize',
    'is_satisfiable',
    'entails',
    'is_tautology',

    # Truth-table oracle
    'MAX_ATOMS',
    'OracleInputError',
    'evaluate',
    'oracle_entails',
    'oracle_equivalent',
    'oracle_satisfiable',
    'TruthTableOracle'
]
