"""
Reification of general class axioms into dedicated components.

A general class axiom ``C ⊑ D`` (neither side an OID) gets a fresh OID made
equivalent to one side; the axiom is then restated as a necessary or
sufficient condition on that OID.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from bridge.translation import is_general_axiom
from models.axioms import DlAxiom, Equiv
from models.statements import Collection, Condition, Indicator, OntologicalComponent, OidStatement
from models.terms import Oid, class_oids, role_oids


class Side(Enum):
    LHS = "lhs"
    RHS = "rhs"


class ReificationError(ValueError):
    pass


def reify_general_axiom(a: DlAxiom, fresh: Oid, side: Side,
                        collection: Optional[Collection] = None) -> tuple[OntologicalComponent, frozenset]:
    """
    Return the dedicated component for ``fresh`` and its statements.

    Translating the statements yields a theory equivalent to ``{a}`` over
    the signature of ``a``.
    """
    if not is_general_axiom(a):
        raise ReificationError("Axiom has an OID side; reverse translation applies instead")
    mentioned = class_oids(a.lhs) | class_oids(a.rhs) | role_oids(a.lhs) | role_oids(a.rhs)
    if fresh in mentioned:
        raise ReificationError(f"{fresh} already occurs in the axiom")
    if collection is not None and collection.knows(fresh):
        raise ReificationError(f"{fresh} is already in use in the collection")

    chosen, other = (a.lhs, a.rhs) if side is Side.LHS else (a.rhs, a.lhs)
    if isinstance(a, Equiv):
        condition = Condition.NSC
    else:
        # fresh ≡ lhs turns lhs ⊑ rhs into fresh ⊑ rhs, fresh ≡ rhs into lhs ⊑ fresh
        condition = Condition.NC if side is Side.LHS else Condition.SC
    statements = frozenset({
        OidStatement(fresh, Indicator.ANALYTIC, Condition.NSC, chosen),
        OidStatement(fresh, Indicator.ANALYTIC, condition, other),
    })
    return OntologicalComponent(fresh, statements), statements
