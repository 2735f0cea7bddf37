"""
Translation between OID statements and description-logic axioms.

    has_NSC  ->  subject ≡ characterization
    has_NC   ->  subject ⊑ characterization
    has_SC   ->  characterization ⊑ subject

The indicator plays no part in translation; analytic and synthetic
statements are reasoned over identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from models.axioms import DlAxiom, Equiv, Sub
from models.statements import Condition, Indicator, OidStatement
from models.terms import Atom, Oid


@dataclass(frozen=True)
class NotReverseTranslatable:
    """An inferred axiom with no OID atom on either side; kept for reporting."""
    axiom: DlAxiom


def translate(s: OidStatement) -> DlAxiom:
    subject = Atom(s.subject)
    if s.condition is Condition.NSC:
        return Equiv(subject, s.characterization)
    if s.condition is Condition.NC:
        return Sub(subject, s.characterization)
    return Sub(s.characterization, subject)


def translate_theory(statements: Iterable[OidStatement]) -> frozenset:
    return frozenset(translate(s) for s in statements)


def reverse_translate(a: DlAxiom, direction_subject: Oid) -> Union[OidStatement, NotReverseTranslatable]:
    """
    Turn an axiom back into an OID statement with an empty indicator slot.

    When both sides qualify, the side equal to ``direction_subject`` is the
    subject (for Sub the left side wins otherwise).
    """
    lhs_oid = a.lhs.oid if isinstance(a.lhs, Atom) else None
    rhs_oid = a.rhs.oid if isinstance(a.rhs, Atom) else None

    if isinstance(a, Equiv):
        if rhs_oid is not None and rhs_oid == direction_subject and lhs_oid != direction_subject:
            return OidStatement(rhs_oid, None, Condition.NSC, a.lhs)
        if lhs_oid is not None:
            return OidStatement(lhs_oid, None, Condition.NSC, a.rhs)
        if rhs_oid is not None:
            return OidStatement(rhs_oid, None, Condition.NSC, a.lhs)
        return NotReverseTranslatable(a)

    if rhs_oid is not None and rhs_oid == direction_subject and lhs_oid != direction_subject:
        return OidStatement(rhs_oid, None, Condition.SC, a.lhs)
    if lhs_oid is not None:
        return OidStatement(lhs_oid, None, Condition.NC, a.rhs)
    if rhs_oid is not None:
        return OidStatement(rhs_oid, None, Condition.SC, a.lhs)
    return NotReverseTranslatable(a)


def term_centered_statements(a: DlAxiom, indicator: Optional[Indicator] = Indicator.ANALYTIC) -> frozenset:
    """
    Rewrite an axiom as one OID statement per OID-atom side.

    ``OID_02 ⊑ OID_01`` becomes ``OID_02 has_NC OID_01`` and
    ``OID_01 has_SC OID_02``. Axioms without OID sides yield nothing.
    """
    statements = set()
    for side in (a.lhs, a.rhs):
        if isinstance(side, Atom):
            result = reverse_translate(a, side.oid)
            if isinstance(result, OidStatement):
                statements.add(result if indicator is None else result.with_indicator(indicator))
    return frozenset(statements)


def is_general_axiom(a: DlAxiom) -> bool:
    return not isinstance(a.lhs, Atom) and not isinstance(a.rhs, Atom)
