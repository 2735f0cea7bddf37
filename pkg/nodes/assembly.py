"""
Assembly node for the meaning engine.

Removes inferred statements that restate asserted ones, drops inferred NC
statements subsumed by an NSC with the same characterization, and builds the
final EBMS.
"""

from typing import Any, Dict

from models.meaning import Ebms
from models.state import MeaningState
from models.statements import Condition


def dedupe_inferred(asserted: frozenset, inferred: frozenset) -> frozenset:
    remaining = inferred - asserted
    nsc_characterizations = {
        s.characterization for s in asserted | remaining if s.condition is Condition.NSC
    }
    return frozenset(
        s for s in remaining
        if not (s.condition is Condition.NC and s.characterization in nsc_characterizations)
    )


def assemble_node(state: MeaningState) -> Dict[str, Any]:
    asserted = state.get("asserted", frozenset())
    coherent = state.get("coherent", True)
    if coherent:
        inferred = dedupe_inferred(asserted, state.get("inferred", frozenset()))
        extra = state.get("non_reverse_translatable", frozenset())
    else:
        # an incoherent subject entails everything; only what was asserted is reported
        inferred, extra = frozenset(), frozenset()
    return {"ebms": Ebms(state["subject"], asserted, inferred, extra, coherent)}
