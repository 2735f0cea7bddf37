"""
Meaning engine - EBMS pipeline orchestration.

This module wires the theory, coherence, closure and assembly nodes into a
compiled LangGraph workflow and runs it once per OID, optionally for many
OIDs concurrently.
"""

import asyncio
from typing import Any, Dict, Iterable, Optional

from langgraph.graph import StateGraph, START, END

from config.settings import DEFAULT_CONFIG, OntoCompConfig
from engines.tableau import TableauReasoner
from models.meaning import AnalyticTheory, Ebms
from models.state import MeaningState
from models.statements import Collection
from models.terms import Oid
from nodes import (
    asserted_ebms, analytic_theory, asserted_node, theory_node,
    coherence_node, route_after_coherence,
    closure_node, candidate_characterizations,
    assemble_node,
)
from utils.console import status


class MeaningEngine:
    """
    Computes entailment-based meaning specifications.

    The compiled graph is built once per engine and shared by every
    computation; each run works on its own state dictionary.
    """

    def __init__(self, config: OntoCompConfig = None):
        self.config = config or OntoCompConfig.from_env()
        self.reasoner = TableauReasoner(self.config)
        self.graph = None
        self.build_graph()

    def build_graph(self):
        """Build the EBMS workflow graph."""
        graph_builder = StateGraph(MeaningState)

        graph_builder.add_node("asserted", self._asserted_wrapper)
        graph_builder.add_node("theory", self._theory_wrapper)
        graph_builder.add_node("coherence", self._coherence_wrapper)
        graph_builder.add_node("closure", self._closure_wrapper)
        graph_builder.add_node("assemble", assemble_node)

        graph_builder.add_edge(START, "asserted")
        graph_builder.add_edge("asserted", "theory")
        graph_builder.add_edge("theory", "coherence")
        graph_builder.add_conditional_edges(
            "coherence",
            route_after_coherence,
            {"closure": "closure", "assemble": "assemble"}
        )
        graph_builder.add_edge("closure", "assemble")
        graph_builder.add_edge("assemble", END)

        self.graph = graph_builder.compile()

    def _asserted_wrapper(self, state: MeaningState) -> Dict[str, Any]:
        return asserted_node(state, self.reasoner)

    def _theory_wrapper(self, state: MeaningState) -> Dict[str, Any]:
        update = theory_node(state, self.reasoner)
        status(f"📚 {state['subject']}: analytic theory of {len(update['theory'].statements)} statements", self.config)
        return update

    def _coherence_wrapper(self, state: MeaningState) -> Dict[str, Any]:
        update = coherence_node(state, self.reasoner)
        if not update["coherent"]:
            status(f"⚠️ {state['subject']} is incoherent - closure skipped", self.config)
        return update

    def _closure_wrapper(self, state: MeaningState) -> Dict[str, Any]:
        return closure_node(state, self.reasoner)

    def run(self, c: Collection, x: Oid, report: Optional[bool] = None) -> MeaningState:
        """Run the whole pipeline and return its final state."""
        initial: MeaningState = {
            "collection": c,
            "subject": x,
            "report_mode": self.config.report_mode if report is None else report,
        }
        return self.graph.invoke(initial)

    def ebms(self, c: Collection, x: Oid, report: Optional[bool] = None) -> Ebms:
        return self.run(c, x, report)["ebms"]

    def asserted_ebms(self, c: Collection, x: Oid) -> frozenset:
        return asserted_ebms(c, x, self.reasoner)

    def analytic_theory(self, c: Collection, x: Oid) -> AnalyticTheory:
        return analytic_theory(c, x, self.reasoner)

    def candidate_characterizations(self, t: AnalyticTheory) -> frozenset:
        return candidate_characterizations(t)

    def is_coherent(self, c: Collection, x: Oid) -> bool:
        state = {"collection": c, "subject": x}
        state.update(theory_node(state, self.reasoner))
        return coherence_node(state, self.reasoner)["coherent"]

    async def ebms_many(self, c: Collection, oids: Iterable[Oid],
                        report: Optional[bool] = None) -> Dict[Oid, Ebms]:
        """
        Compute the EBMS of several OIDs concurrently.

        At most ``config.workers`` computations run at once; each one runs in
        a worker thread. The result is keyed in canonical OID order.
        """
        oids = sorted(set(oids))
        semaphore = asyncio.Semaphore(self.config.workers)

        async def compute_with_limit(i: int, oid: Oid):
            async with semaphore:
                status(f"🔍 EBMS {i}/{len(oids)}: {oid}", self.config)
                return oid, await asyncio.to_thread(self.ebms, c, oid, report)

        tasks = [compute_with_limit(i, oid) for i, oid in enumerate(oids, 1)]
        results = await asyncio.gather(*tasks)
        return dict(sorted(results, key=lambda item: item[0].key))

    def compute_all(self, c: Collection, oids: Optional[Iterable[Oid]] = None,
                    report: Optional[bool] = None) -> Dict[Oid, Ebms]:
        """Synchronous entry point for ebms_many; defaults to every component."""
        return asyncio.run(self.ebms_many(c, c.oids() if oids is None else oids, report))


def ebms(c: Collection, x: Oid, config: OntoCompConfig = None) -> Ebms:
    return MeaningEngine(config or DEFAULT_CONFIG).ebms(c, x)
