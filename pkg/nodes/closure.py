"""
Closure node for the meaning engine.

The deductive closure of an analytic theory is infinite; it is computed over
a finite candidate set of characterizations: every OID class atom and lexical
unit of the theory, their negations, and every asserted characterization.
"""

from typing import Any, Callable, Dict

from bridge.translation import NotReverseTranslatable, reverse_translate
from engines.tableau import ReasonerBudgetExceeded, TableauReasoner
from models.axioms import DlAxiom, Sub, Tbox
from models.meaning import AnalyticTheory
from models.state import MeaningState
from models.statements import Condition, Indicator, OidStatement
from models.terms import Atom, ConceptExpr, NlAtom, Not, Oid, class_oids, lexical_units, normalize


class CandidateBudgetExceeded(ReasonerBudgetExceeded):
    """The reasoner ran out of nodes while checking one EBMS candidate."""

    def __init__(self, budget: int, candidate: ConceptExpr):
        super().__init__(budget, f"candidate {candidate}")
        self.candidate = candidate


def candidate_characterizations(t: AnalyticTheory) -> frozenset:
    literals: set[ConceptExpr] = set()
    asserted: set[ConceptExpr] = set()
    for statement in t.statements:
        asserted.add(statement.characterization)
        literals.add(Atom(statement.subject))
        literals.update(Atom(oid) for oid in class_oids(statement.characterization))
        literals.update(NlAtom(unit) for unit in lexical_units(statement.characterization))
    negated = {Not(literal) for literal in literals}
    return frozenset(normalize(e) for e in literals | negated | asserted)


def _by_sort_key(expressions) -> list:
    return sorted(expressions, key=lambda e: e.sort_key())


def _guarded(reasoner: TableauReasoner, candidate: ConceptExpr, check: Callable[..., bool], *args) -> bool:
    try:
        return check(*args)
    except ReasonerBudgetExceeded:
        raise CandidateBudgetExceeded(reasoner.node_budget, candidate) from None


def _entailed(reasoner: TableauReasoner, candidate: ConceptExpr, tbox: Tbox, axiom: DlAxiom) -> bool:
    """Entailed by the theory and not already true in every model."""
    if not _guarded(reasoner, candidate, reasoner.entails, tbox, axiom):
        return False
    return not _guarded(reasoner, candidate, reasoner.is_tautology, axiom)


def infer_statements(x: Oid, theory: AnalyticTheory, tbox: Tbox, reasoner: TableauReasoner) -> frozenset:
    """Analytic NC/NSC statements on x entailed by the theory for some candidate."""
    subject = Atom(x)
    inferred: set[OidStatement] = set()
    for candidate in _by_sort_key(candidate_characterizations(theory)):
        if not _entailed(reasoner, candidate, tbox, Sub(subject, candidate)):
            continue
        sufficient = _guarded(reasoner, candidate, reasoner.entails, tbox, Sub(candidate, subject))
        condition = Condition.NSC if sufficient else Condition.NC
        inferred.add(OidStatement(x, Indicator.ANALYTIC, condition, candidate))
    return frozenset(inferred)


def non_reverse_translatable(theory: AnalyticTheory, tbox: Tbox, reasoner: TableauReasoner) -> frozenset:
    """Entailed subsumptions between lexical units and complex asserted characterizations."""
    complex_asserted = {s.characterization for s in theory.statements if not isinstance(s.characterization, Atom)}
    pool = _by_sort_key(
        c for c in candidate_characterizations(theory) if isinstance(c, NlAtom) or c in complex_asserted
    )
    found = set()
    for lhs in pool:
        for rhs in pool:
            if lhs == rhs or not _entailed(reasoner, lhs, tbox, Sub(lhs, rhs)):
                continue
            result = reverse_translate(Sub(lhs, rhs), theory.root)
            if isinstance(result, NotReverseTranslatable):
                found.add(result.axiom)
    return frozenset(found)


def closure_node(state: MeaningState, reasoner: TableauReasoner) -> Dict[str, Any]:
    theory, tbox = state["theory"], state["tbox"]
    update: Dict[str, Any] = {"inferred": infer_statements(state["subject"], theory, tbox, reasoner)}
    if state.get("report_mode"):
        update["non_reverse_translatable"] = non_reverse_translatable(theory, tbox, reasoner)
    return update
