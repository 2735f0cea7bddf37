"""
Canonical ASCII serialization of statements and collections.

``parse_statement(serialize_statement(s))`` equals ``s`` under canonical
equality for every well-formed statement.
"""

from __future__ import annotations

from typing import Union

from models.statements import Collection, Hri, Meta, OidStatement, sorted_statements
from models.terms import quote_string, render


def serialize_statement(s: Union[OidStatement, Hri, Meta], unicode: bool = False) -> str:
    if isinstance(s, OidStatement):
        indicator = s.indicator.value if s.indicator is not None else "?"
        return f"{s.subject} | {indicator} | {s.condition.value} | {render(s.characterization, unicode)}"
    if isinstance(s, Hri):
        return f"{s.subject} | HRI | {quote_string(s.label)}@{s.lang}"
    if isinstance(s, Meta):
        return f"{s.subject} | Meta | {s.key} | {quote_string(s.value)}"
    raise TypeError(f"Not a statement: {s!r}")


def serialize_collection(c: Collection) -> str:
    """Pragmas, then every component's OC and OID statements in canonical order."""
    lines: list[str] = []
    if c.version_label:
        lines.append(f"@version {c.version_label}")
    if c.iri_base:
        lines.append(f"@base {c.iri_base}")
    for oid in c.oids():
        component = c.components[oid]
        lines.append("")
        lines.append(f"# {oid}")
        lines.extend(serialize_statement(s) for s in sorted_statements(component.oc_statements))
        lines.extend(serialize_statement(s) for s in sorted_statements(component.oid_statements))
    return "\n".join(lines).lstrip("\n") + "\n"
