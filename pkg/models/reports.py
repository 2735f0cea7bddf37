"""
Report models for the meaning engine and the analyses.

This module contains the Pydantic models rendered by ``--json`` outputs:
EBMS listings, import-impact reports, component diffs and the JSON export.
Statements and axioms are carried in their canonical ASCII serialization.
"""

from enum import Enum
from typing import Dict, Iterable, List, Optional

from pydantic import BaseModel, Field

from language.serializer import serialize_statement
from models.axioms import render_axiom
from models.meaning import AnalyticTheory, Ebms
from models.statements import sorted_statements
from models.terms import Oid


class ImpactVerdict(str, Enum):
    """Import verdicts, declared from least to most severe."""
    NO_CHANGE = "NoChange"
    EXTENDED = "Extended"
    MEANING_ALTERED = "MeaningAltered"
    INCOHERENCE_INTRODUCED = "IncoherenceIntroduced"

    @property
    def severity(self) -> int:
        return list(ImpactVerdict).index(self)


class DiffKind(str, Enum):
    """Diff classifications, declared from least to most severe."""
    IDENTICAL = "Identical"
    ANNOTATION_ONLY = "AnnotationOnly"
    SYNTHETIC_OR_SUFFICIENT_ONLY = "SyntheticOrSufficientOnly"
    MEANING_AFFECTING = "MeaningAffecting"
    INCOHERENT = "Incoherent"

    @property
    def changes_meaning(self) -> bool:
        return self in (DiffKind.MEANING_AFFECTING, DiffKind.INCOHERENT)


def serialized(statements: Iterable) -> List[str]:
    return [serialize_statement(s) for s in sorted_statements(statements)]


class EbmsOutput(BaseModel):
    """Structured form of one EBMS, optionally with its analytic theory."""
    oid: str = Field(description="Subject OID of the meaning specification")
    coherent: bool = Field(description="False when the subject is unsatisfiable under its analytic theory")
    asserted: List[str] = Field(description="Asserted analytic entailments in canonical order")
    inferred: List[str] = Field(description="Inferred analytic entailments in canonical order")
    non_reverse_translatable: List[str] = Field(default_factory=list, description="Entailed axioms with no OID side (report mode)")
    theory: Optional[List[str]] = Field(default=None, description="Statements of the analytic theory")
    primitives: Optional[List[str]] = Field(default=None, description="Mentioned OIDs without asserted analytic entailments")

    @classmethod
    def from_ebms(cls, e: Ebms, theory: Optional[AnalyticTheory] = None) -> 'EbmsOutput':
        return cls(
            oid=str(e.subject),
            coherent=e.coherent,
            asserted=serialized(e.asserted),
            inferred=serialized(e.inferred),
            non_reverse_translatable=[render_axiom(a) for a in e.ordered_non_reverse_translatable()],
            theory=serialized(theory.statements) if theory is not None else None,
            primitives=[str(o) for o in sorted(theory.primitives)] if theory is not None else None,
        )

    @property
    def statements(self) -> set[str]:
        return set(self.asserted) | set(self.inferred)


class StatementDelta(BaseModel):
    """Statements present on only one side of a comparison."""
    added: List[str] = Field(default_factory=list, description="Present after, absent before")
    removed: List[str] = Field(default_factory=list, description="Present before, absent after")

    @classmethod
    def between(cls, before: Iterable, after: Iterable) -> 'StatementDelta':
        before, after = frozenset(before), frozenset(after)
        return cls(added=serialized(after - before), removed=serialized(before - after))

    @classmethod
    def between_lines(cls, before: Iterable[str], after: Iterable[str]) -> 'StatementDelta':
        before, after = set(before), set(after)
        return cls(added=sorted(after - before), removed=sorted(before - after))

    @property
    def is_empty(self) -> bool:
        return not self.added and not self.removed


class OidImpact(BaseModel):
    """Effect of an import on one OID."""
    oid: str
    verdict: ImpactVerdict
    ebms_before: EbmsOutput
    ebms_after: EbmsOutput
    delta: StatementDelta


class ImpactReport(BaseModel):
    """Outcome of merging incoming components into a base collection."""
    imported: List[str] = Field(default_factory=list, description="OIDs of the incoming components")
    affected: Dict[str, OidImpact] = Field(default_factory=dict, description="Per-OID before/after meaning specifications")
    coherence_breaks: List[str] = Field(default_factory=list, description="OIDs coherent before the import and incoherent after")
    conflicts: Dict[str, List[str]] = Field(default_factory=dict, description="Incoming NSC lines that disagree with the base")
    verdict: ImpactVerdict = Field(default=ImpactVerdict.NO_CHANGE, description="Most severe per-OID verdict")

    def verdict_for(self, oid: Oid) -> ImpactVerdict:
        impact = self.affected.get(str(oid))
        return impact.verdict if impact is not None else ImpactVerdict.NO_CHANGE


class DiffReport(BaseModel):
    """Classification of the change to one component between two versions."""
    oid: str
    kind: DiffKind
    ebms_delta: StatementDelta = Field(default_factory=StatementDelta, description="EBMS statements added and removed")
    oc_delta: StatementDelta = Field(default_factory=StatementDelta, description="HRI and metadata lines added and removed")
    detail: List[str] = Field(default_factory=list, description="Human-readable change notes")


class ExportedStatement(BaseModel):
    statement: str
    indicator: str
    condition: str
    axiom: str = Field(description="Translated description-logic axiom")


class ExportedComponent(BaseModel):
    oid: str
    iri: str
    labels: List[str] = Field(default_factory=list)
    metadata: Dict[str, str] = Field(default_factory=dict)
    statements: List[ExportedStatement] = Field(default_factory=list)


class ExportDocument(BaseModel):
    """JSON export of a whole collection."""
    version: str
    iri_base: str
    components: List[ExportedComponent] = Field(default_factory=list)
    primitives: List[str] = Field(default_factory=list)
