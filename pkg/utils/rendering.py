"""
Text rendering of meaning specifications and analysis reports.

EBMS listings are one prefixed statement per line; reports are key: value
blocks. All orderings are canonical so repeated runs print identical text.
"""

from typing import Iterable, List

from language.serializer import serialize_statement
from models.axioms import render_axiom
from models.meaning import AnalyticTheory, Ebms
from models.reports import DiffReport, ImpactReport, StatementDelta

INCOHERENT_BANNER = "INCOHERENT"


def render_theory(theory: AnalyticTheory, unicode: bool = False) -> List[str]:
    lines = [f"T: {serialize_statement(s, unicode)}" for s in theory.ordered()]
    lines.extend(f"P: {oid}" for oid in sorted(theory.primitives))
    return lines


def render_ebms(e: Ebms, asserted_only: bool = False, unicode: bool = False) -> List[str]:
    """``A:`` asserted lines, then ``I:`` inferred and ``N:`` report-mode lines."""
    lines = []
    if not e.coherent:
        lines.append(f"{INCOHERENT_BANNER} {e.subject}")
    lines.extend(f"A: {serialize_statement(s, unicode)}" for s in e.ordered_asserted())
    if asserted_only:
        return lines
    lines.extend(f"I: {serialize_statement(s, unicode)}" for s in e.ordered_inferred())
    lines.extend(f"N: {render_axiom(a, unicode)}" for a in e.ordered_non_reverse_translatable())
    return lines


def _delta_lines(delta: StatementDelta, prefix: str = "", indent: str = "") -> List[str]:
    lines = [f"{indent}{prefix}removed: {line}" for line in delta.removed]
    lines.extend(f"{indent}{prefix}added: {line}" for line in delta.added)
    return lines


def render_diff(reports: Iterable[DiffReport]) -> List[str]:
    lines: List[str] = []
    for report in reports:
        if lines:
            lines.append("")
        lines.append(f"oid: {report.oid}")
        lines.append(f"kind: {report.kind.value}")
        lines.extend(_delta_lines(report.ebms_delta, "ebms_"))
        lines.extend(_delta_lines(report.oc_delta, "oc_"))
        lines.extend(f"detail: {line}" for line in report.detail)
    return lines


def render_impact(report: ImpactReport) -> List[str]:
    lines = [f"verdict: {report.verdict.value}"]
    lines.extend(f"imported: {oid}" for oid in report.imported)
    lines.extend(f"coherence_break: {oid}" for oid in report.coherence_breaks)
    for oid, impact in report.affected.items():
        lines.append(f"affected: {oid}")
        lines.append(f"  verdict: {impact.verdict.value}")
        lines.extend(_delta_lines(impact.delta, indent="  "))
    for oid, conflicting in report.conflicts.items():
        lines.extend(f"CONFLICT {oid}: {line}" for line in conflicting)
    return lines
