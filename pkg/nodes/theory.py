"""
Theory nodes for the meaning engine.

This module selects analytic entailments and builds the analytic theory of a
component: its asserted analytic entailments plus those of every OID
recursively mentioned in their characterizations.
"""

from typing import Any, Dict

from bridge.translation import translate, translate_theory
from engines.tableau import TableauReasoner
from models.axioms import Tbox
from models.meaning import AnalyticTheory
from models.state import MeaningState
from models.statements import Collection, Condition, Indicator, OidStatement, mentioned_oids
from models.terms import Oid


def is_analytic_entailment(s: OidStatement, reasoner: TableauReasoner = None) -> bool:
    """Analytic, NC or NSC, and not a tautology."""
    if s.indicator is not Indicator.ANALYTIC or s.condition is Condition.SC:
        return False
    reasoner = reasoner or TableauReasoner()
    return not reasoner.is_tautology(translate(s))


def asserted_ebms(c: Collection, x: Oid, reasoner: TableauReasoner = None) -> frozenset:
    component = c.get(x)
    if component is None:
        return frozenset()
    reasoner = reasoner or TableauReasoner()
    return frozenset(s for s in component.oid_statements if is_analytic_entailment(s, reasoner))


def analytic_theory(c: Collection, x: Oid, reasoner: TableauReasoner = None) -> AnalyticTheory:
    """
    Least fixed point of the recursion rule, with a visited set so circular
    definitions terminate. The root is never its own primitive.
    """
    reasoner = reasoner or TableauReasoner()
    statements: set[OidStatement] = set()
    primitives: set[Oid] = set()
    visited: set[Oid] = set()
    frontier = [x]
    while frontier:
        oid = frontier.pop()
        if oid in visited:
            continue
        visited.add(oid)
        own = asserted_ebms(c, oid, reasoner)
        if not own and oid != x:
            primitives.add(oid)
        for statement in own:
            statements.add(statement)
            frontier.extend(mentioned_oids(statement) - visited)
    return AnalyticTheory(x, frozenset(statements), frozenset(primitives))


def asserted_node(state: MeaningState, reasoner: TableauReasoner) -> Dict[str, Any]:
    """Collect the subject's own analytic entailments."""
    return {"asserted": asserted_ebms(state["collection"], state["subject"], reasoner)}


def theory_node(state: MeaningState, reasoner: TableauReasoner) -> Dict[str, Any]:
    """Build the analytic theory and its TBox."""
    theory = analytic_theory(state["collection"], state["subject"], reasoner)
    return {
        "theory": theory,
        "tbox": Tbox(translate_theory(theory.statements)),
    }
