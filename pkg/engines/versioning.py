"""
Component-level semantic diffing between two versions of a collection.

Each version's EBMS is computed within its own collection; the change is
classified on the ladder Incoherent > MeaningAffecting >
SyntheticOrSufficientOnly > AnnotationOnly > Identical.
"""

from typing import Optional

from config.settings import DEFAULT_CONFIG
from engines.meaning import MeaningEngine
from language.serializer import serialize_statement
from models.meaning import Ebms
from models.reports import DiffKind, DiffReport, StatementDelta
from models.statements import Collection, OntologicalComponent
from models.terms import Oid

DEPRECATION_KEY = "status"
DEPRECATED = "deprecated"


def _is_deprecated(component: Optional[OntologicalComponent]) -> bool:
    return component is not None and component.metadata.get(DEPRECATION_KEY) == DEPRECATED


def classify_change(oid: Oid, old: Optional[OntologicalComponent], new: Optional[OntologicalComponent],
                    ebms_old: Ebms, ebms_new: Ebms) -> DiffReport:
    """Build the diff report of one OID from both components and both EBMS values."""
    old_statements = old.oid_statements if old else frozenset()
    new_statements = new.oid_statements if new else frozenset()
    ebms_delta = StatementDelta.between(ebms_old.statements, ebms_new.statements)
    oc_delta = StatementDelta.between_lines(
        (serialize_statement(s) for s in (old.oc_statements if old else ())),
        (serialize_statement(s) for s in (new.oc_statements if new else ())),
    )
    statements_changed = old_statements != new_statements
    changed = statements_changed or not ebms_delta.is_empty or not oc_delta.is_empty

    if not changed:
        kind = DiffKind.IDENTICAL
    elif not (ebms_old.coherent and ebms_new.coherent):
        kind = DiffKind.INCOHERENT
    elif not ebms_delta.is_empty:
        kind = DiffKind.MEANING_AFFECTING
    elif statements_changed:
        kind = DiffKind.SYNTHETIC_OR_SUFFICIENT_ONLY
    else:
        kind = DiffKind.ANNOTATION_ONLY

    detail: list[str] = []
    if old is None and new is not None:
        detail.append(f"ADDED {oid}")
    if new is None and old is not None:
        detail.append(f"REMOVED {oid}")
    if _is_deprecated(new) and not _is_deprecated(old):
        detail.append(f"DEPRECATED {oid}")
    if _is_deprecated(old) and not _is_deprecated(new):
        detail.append(f"UNDEPRECATED {oid}")
    for label, coherent in (("old", ebms_old.coherent), ("new", ebms_new.coherent)):
        if not coherent:
            detail.append(f"INCOHERENT in {label} version")
    detail.extend(f"- {line}" for line in ebms_delta.removed)
    detail.extend(f"+ {line}" for line in ebms_delta.added)
    if statements_changed and ebms_delta.is_empty:
        detail.append(f"{len(old_statements ^ new_statements)} OID statements changed outside the meaning specification")

    return DiffReport(oid=str(oid), kind=kind, ebms_delta=ebms_delta, oc_delta=oc_delta, detail=detail)


def diff_components(old: tuple[Collection, Oid], new: tuple[Collection, Oid],
                    engine: MeaningEngine = None) -> DiffReport:
    (c_old, oid), (c_new, new_oid) = old, new
    if str(oid) != str(new_oid):
        raise ValueError(f"Cannot diff {oid} against {new_oid}: the OIDs differ")
    engine = engine or MeaningEngine(DEFAULT_CONFIG)
    return classify_change(
        oid, c_old.get(oid), c_new.get(oid), engine.ebms(c_old, oid), engine.ebms(c_new, oid)
    )


def diff_collections(c_old: Collection, c_new: Collection, engine: MeaningEngine = None) -> list[DiffReport]:
    """One report per component OID present in either version, in canonical OID order."""
    engine = engine or MeaningEngine(DEFAULT_CONFIG)
    oids = sorted(set(c_old.oids()) | set(c_new.oids()))
    old_ebms = engine.compute_all(c_old, oids)
    new_ebms = engine.compute_all(c_new, oids)
    return [
        classify_change(oid, c_old.get(oid), c_new.get(oid), old_ebms[oid], new_ebms[oid])
        for oid in oids
    ]
