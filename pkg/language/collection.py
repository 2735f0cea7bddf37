"""
Loader for ``.ocs`` collection files.

Line-oriented UTF-8 text (LF or CRLF): ``#`` starts a comment line, blank
lines are ignored, ``@version <label>`` and ``@base <iri>`` are pragmas and
every other line is a statement. Statements are grouped into components by
subject OID.
"""

from __future__ import annotations

from typing import Optional

from language.statements import ParseDiagnostic, Severity, parse_statement
from models.statements import Collection, Hri, OntologicalComponent, OidStatement
from models.terms import Oid


def parse_collection(text: str, strict: bool = False) -> tuple[Collection, list[ParseDiagnostic]]:
    """
    Parse a whole collection file.

    Per-line errors are aggregated; the partial collection built from the
    valid lines is always returned alongside the diagnostics.
    """
    diagnostics: list[ParseDiagnostic] = []
    version_label = ""
    iri_base: Optional[str] = None
    order: list[Oid] = []
    oid_statements: dict[Oid, dict] = {}
    oc_statements: dict[Oid, dict] = {}

    if text.startswith("\ufeff"):
        text = text[1:]

    for line_no, raw_line in enumerate(text.split("\n"), start=1):
        raw_line = raw_line.removesuffix("\r")
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        column = len(raw_line) - len(raw_line.lstrip()) + 1
        if line.startswith("@"):
            name, _, value = line[1:].partition(" ")
            value = value.strip()
            if name == "version":
                version_label = value
            elif name == "base":
                if not value:
                    diagnostics.append(ParseDiagnostic(line_no, column, Severity.ERROR,
                                                       "@base requires an IRI", "bad-pragma"))
                else:
                    iri_base = value
            else:
                diagnostics.append(ParseDiagnostic(line_no, column, Severity.WARNING,
                                                   f"Unknown pragma @{name}", "unknown-pragma"))
            continue

        result = parse_statement(raw_line, line_no, strict=strict, iri_base=iri_base)
        if isinstance(result, ParseDiagnostic):
            diagnostics.append(result)
            continue

        subject = result.subject
        if subject not in oid_statements:
            order.append(subject)
            oid_statements[subject] = {}
            oc_statements[subject] = {}
        bucket = oid_statements if isinstance(result, OidStatement) else oc_statements
        if result in bucket[subject]:
            first = bucket[subject][result]
            diagnostics.append(ParseDiagnostic(line_no, column, Severity.WARNING,
                                               f"Duplicate of line {first}", "duplicate"))
            continue
        bucket[subject][result] = line_no

    diagnostics.extend(_hri_collisions(oc_statements))
    diagnostics.sort(key=lambda d: (d.line, d.column))
    components = {
        oid: OntologicalComponent(oid, frozenset(oid_statements[oid]), frozenset(oc_statements[oid]))
        for oid in order
    }
    return Collection(components, version_label, iri_base), diagnostics


def _hri_collisions(oc_statements: dict[Oid, dict]) -> list[ParseDiagnostic]:
    seen: dict[tuple[str, str], Oid] = {}
    warnings: list[ParseDiagnostic] = []
    entries = sorted(
        ((line_no, statement) for per_oid in oc_statements.values()
         for statement, line_no in per_oid.items() if isinstance(statement, Hri)),
        key=lambda entry: entry[0],
    )
    for line_no, hri in entries:
        key = (hri.label, hri.lang)
        owner = seen.setdefault(key, hri.subject)
        if owner != hri.subject:
            warnings.append(ParseDiagnostic(
                line_no, 1, Severity.WARNING,
                f'HRI "{hri.label}"@{hri.lang} already identifies {owner}', "hri-collision",
            ))
    return warnings
