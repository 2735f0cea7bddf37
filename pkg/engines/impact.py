"""
Import-impact analysis.

Checks whether importing ontological components into a collection alters the
analytic deductive closure of the imported components or of the receiving
ones.
"""

from typing import Iterable

from config.settings import DEFAULT_CONFIG
from engines.meaning import MeaningEngine
from models.reports import EbmsOutput, ImpactReport, ImpactVerdict, OidImpact, StatementDelta, serialized
from models.meaning import Ebms
from models.statements import Collection, Condition, OntologicalComponent
from utils.console import status


def impact_verdict(before: Ebms, after: Ebms) -> ImpactVerdict:
    if before.coherent and not after.coherent:
        return ImpactVerdict.INCOHERENCE_INTRODUCED
    removed = before.statements - after.statements
    if removed:
        return ImpactVerdict.MEANING_ALTERED
    if after.statements - before.statements:
        return ImpactVerdict.EXTENDED
    return ImpactVerdict.NO_CHANGE


def nsc_conflicts(base: Collection, source: Collection) -> dict[str, list[str]]:
    """Incoming NSC lines on OIDs whose base component already has a different NSC set."""
    conflicts = {}
    for oid in source.oids():
        existing = base.get(oid)
        if existing is None:
            continue
        base_nsc = existing.statements_with(Condition.NSC)
        incoming_nsc = source.components[oid].statements_with(Condition.NSC)
        if base_nsc and incoming_nsc and base_nsc != incoming_nsc:
            conflicts[str(oid)] = serialized(incoming_nsc - base_nsc)
    return conflicts


def import_impact(base: Collection, incoming: Iterable[OntologicalComponent],
                  engine: MeaningEngine = None) -> ImpactReport:
    """
    Compare meaning specifications before and after merging ``incoming``.

    New OIDs are compared against their own source collection; OIDs already
    in the base (merged ones included) are compared against the base and are
    reported only when their analytic theory changes.
    """
    engine = engine or MeaningEngine(DEFAULT_CONFIG)
    incoming = list(incoming)
    if not incoming:
        return ImpactReport()

    source = Collection.of(incoming, base.version_label, base.iri_base)
    merged = base.merged(incoming)
    imported = source.oids()
    new_oids = [oid for oid in imported if oid not in base]

    receiving = [
        oid for oid in merged.oids()
        if oid not in new_oids
        and engine.analytic_theory(base, oid).statements != engine.analytic_theory(merged, oid).statements
    ]
    status(f"📦 Import of {len(imported)} components touches {len(receiving)} existing theories", engine.config)

    before = engine.compute_all(source, new_oids)
    before.update(engine.compute_all(base, receiving))
    after = engine.compute_all(merged, [*new_oids, *receiving])

    affected: dict[str, OidImpact] = {}
    coherence_breaks: list[str] = []
    for oid in sorted(after):
        verdict = impact_verdict(before[oid], after[oid])
        if verdict is ImpactVerdict.INCOHERENCE_INTRODUCED:
            coherence_breaks.append(str(oid))
        affected[str(oid)] = OidImpact(
            oid=str(oid),
            verdict=verdict,
            ebms_before=EbmsOutput.from_ebms(before[oid]),
            ebms_after=EbmsOutput.from_ebms(after[oid]),
            delta=StatementDelta.between(before[oid].statements, after[oid].statements),
        )

    overall = max((impact.verdict for impact in affected.values()),
                  key=lambda v: v.severity, default=ImpactVerdict.NO_CHANGE)
    return ImpactReport(
        imported=[str(oid) for oid in imported],
        affected=affected,
        coherence_breaks=coherence_breaks,
        conflicts=nsc_conflicts(base, source),
        verdict=overall,
    )
