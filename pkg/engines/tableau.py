"""
Tableau reasoner for ALC with general TBoxes.

Every axiom is internalized into a universal constraint (``C ⊑ D`` adds
``¬C ⊔ D`` to every node label). Expansion applies ⊓, ⊔ (branching in
canonical operand order), ∃ (successor creation) and ∀ (propagation);
a clash is ``⊥`` or a complementary pair of literals. Successors whose label
is a subset of an ancestor's label are blocked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from config.settings import DEFAULT_CONFIG, OntoCompConfig
from models.axioms import DlAxiom, Equiv, Tbox
from models.terms import And, Bottom, ConceptExpr, Exists, Forall, Not, Or, normalize


class SatOutcome(Enum):
    """Tri-state outcome of a satisfiability query."""
    SATISFIABLE = "satisfiable"
    UNSATISFIABLE = "unsatisfiable"
    BUDGET_EXCEEDED = "budget_exceeded"


class ReasonerBudgetExceeded(RuntimeError):
    """The node budget ran out before the query was decided."""

    def __init__(self, budget: int, query: Optional[str] = None):
        detail = f" while checking {query}" if query else ""
        super().__init__(f"Tableau node budget of {budget} exceeded{detail}")
        self.budget = budget
        self.query = query


def internalize(t: Tbox) -> frozenset:
    """The universal constraint: one NNF concept per subsumption."""
    constraints = set()
    for axiom in t.axioms:
        parts = axiom.split() if isinstance(axiom, Equiv) else (axiom,)
        for sub in parts:
            constraints.add(normalize(Or((Not(sub.lhs), sub.rhs))))
    return frozenset(constraints)


@dataclass
class _Run:
    """State private to one satisfiability query."""
    universal: frozenset
    budget: int
    nodes: int = 0
    unsat_cache: set = field(default_factory=set)

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise ReasonerBudgetExceeded(self.budget)

    def node(self, label: frozenset, ancestors: tuple) -> bool:
        """Decide a fresh node whose initial label is ``label``."""
        self.tick()
        if label in self.unsat_cache:
            return False
        if self.saturate(set(label | self.universal), ancestors):
            return True
        self.unsat_cache.add(label)
        return False

    def saturate(self, label: set, ancestors: tuple) -> bool:
        # ⊓-rule to fixpoint
        pending = [c for c in label if isinstance(c, And)]
        while pending:
            conj = pending.pop()
            for op in conj.operands:
                if op not in label:
                    label.add(op)
                    if isinstance(op, And):
                        pending.append(op)
        if _has_clash(label):
            return False

        # ⊔-rule on the first unsatisfied disjunction in canonical order
        open_disjunctions = [c for c in label if isinstance(c, Or) and not any(op in label for op in c.operands)]
        if open_disjunctions:
            choice = min(open_disjunctions, key=lambda c: c.sort_key())
            for op in choice.operands:
                if self.saturate(label | {op}, ancestors):
                    return True
            return False

        return self.expand_successors(frozenset(label), ancestors)

    def expand_successors(self, label: frozenset, ancestors: tuple) -> bool:
        path = ancestors + (label,)
        existentials = sorted((c for c in label if isinstance(c, Exists)), key=lambda c: c.sort_key())
        for ex in existentials:
            successor = {ex.filler}
            successor.update(c.filler for c in label if isinstance(c, Forall) and c.role == ex.role)
            successor = frozenset(successor)
            if any(successor | self.universal <= earlier for earlier in path):
                continue  # blocked
            if not self.node(successor, path):
                return False
        return True


def _has_clash(label: set) -> bool:
    for c in label:
        if isinstance(c, Bottom):
            return True
        if isinstance(c, Not) and c.operand in label:
            return True
    return False


class TableauReasoner:
    """
    Decides satisfiability and entailment over a TBox.

    Each query runs on a private tableau; nothing is cached across queries.
    """

    def __init__(self, config: OntoCompConfig = None):
        self.config = config or DEFAULT_CONFIG

    @property
    def node_budget(self) -> int:
        return self.config.node_budget

    def check(self, c: ConceptExpr, t: Tbox) -> SatOutcome:
        try:
            return SatOutcome.SATISFIABLE if self.is_satisfiable(c, t) else SatOutcome.UNSATISFIABLE
        except ReasonerBudgetExceeded:
            return SatOutcome.BUDGET_EXCEEDED

    def is_satisfiable(self, c: ConceptExpr, t: Tbox) -> bool:
        """True iff some model of t interprets c as non-empty; raises ReasonerBudgetExceeded."""
        run = _Run(internalize(t), self.node_budget)
        try:
            return run.node(frozenset({normalize(c)}), ())
        except ReasonerBudgetExceeded:
            raise ReasonerBudgetExceeded(self.node_budget, str(normalize(c))) from None

    def entails(self, t: Tbox, a: DlAxiom) -> bool:
        if isinstance(a, Equiv):
            return all(self.entails(t, part) for part in a.split())
        return not self.is_satisfiable(And((a.lhs, Not(a.rhs))), t)

    def is_tautology(self, a: DlAxiom) -> bool:
        """Entailed by the empty TBox, i.e. true in every model."""
        return self.entails(Tbox(), a)


_DEFAULT_REASONER = TableauReasoner()


def is_satisfiable(c: ConceptExpr, t: Tbox) -> bool:
    return _DEFAULT_REASONER.is_satisfiable(c, t)


def entails(t: Tbox, a: DlAxiom) -> bool:
    return _DEFAULT_REASONER.entails(t, a)


def is_tautology(a: DlAxiom) -> bool:
    return _DEFAULT_REASONER.is_tautology(a)
