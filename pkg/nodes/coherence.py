"""
Coherence node for the meaning engine.

An incoherent subject (unsatisfiable under its own analytic theory) entails
everything; the pipeline then skips the closure and publishes only the
asserted statements.
"""

from typing import Any, Dict

from engines.tableau import TableauReasoner
from models.state import MeaningState
from models.terms import Atom


def coherence_node(state: MeaningState, reasoner: TableauReasoner) -> Dict[str, Any]:
    subject = state["subject"]
    coherent = reasoner.is_satisfiable(Atom(subject), state["tbox"])
    return {"coherent": coherent}


def route_after_coherence(state: MeaningState) -> str:
    """Coherent subjects go through the closure; incoherent ones straight to assembly."""
    return "closure" if state.get("coherent") else "assemble"
