"""
Meaning specification models.

This module contains the analytic theory of a component and its
entailment-based meaning specification (EBMS).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from models.axioms import sorted_axioms
from models.statements import Condition, Indicator, sorted_statements
from models.terms import Oid


@dataclass(frozen=True)
class AnalyticTheory:
    """Asserted analytic entailments of the root and of every OID recursively mentioned."""
    root: Oid
    statements: frozenset = field(default_factory=frozenset)
    primitives: frozenset = field(default_factory=frozenset)  # mentioned OIDs with no asserted analytic entailment

    def ordered(self) -> list:
        return sorted_statements(self.statements)


@dataclass(frozen=True)
class Ebms:
    """Asserted plus inferred analytic entailments on one OID."""
    subject: Oid
    asserted: frozenset = field(default_factory=frozenset)
    inferred: frozenset = field(default_factory=frozenset)
    non_reverse_translatable: frozenset = field(default_factory=frozenset)
    coherent: bool = True

    def __post_init__(self):
        for statement in self.asserted | self.inferred:
            if statement.subject != self.subject:
                raise ValueError(f"EBMS member {statement} is not about {self.subject}")
            if statement.indicator is not Indicator.ANALYTIC or statement.condition is Condition.SC:
                raise ValueError(f"EBMS member {statement} is not an analytic NC/NSC statement")
        if self.asserted & self.inferred:
            raise ValueError("Inferred statements must not repeat asserted ones")

    @property
    def statements(self) -> frozenset:
        return self.asserted | self.inferred

    def ordered_asserted(self) -> list:
        return sorted_statements(self.asserted)

    def ordered_inferred(self) -> list:
        return sorted_statements(self.inferred)

    def ordered_non_reverse_translatable(self) -> list:
        return sorted_axioms(self.non_reverse_translatable)
