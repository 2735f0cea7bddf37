"""
Export of collections to OWL functional-style syntax and to JSON.

OIDs become IRIs under the collection's base. A lexical unit becomes a class
IRI under ``<base>/nl/`` made of its percent-encoded text and ``@lang``, and
keeps its original string as an ``rdfs:label``. Synthetic statements carry an
indicator annotation so the analytic/synthetic distinction survives export.
"""

from typing import List, Optional
from urllib.parse import quote

from bridge.translation import translate
from models.axioms import Equiv, render_axiom
from models.reports import ExportDocument, ExportedComponent, ExportedStatement
from models.statements import Collection, Indicator, OidStatement, sorted_statements
from models.terms import (
    And, Atom, Bottom, ConceptExpr, Exists, Forall, LexicalUnit, NlAtom, Not, Oid, Or, Top,
    class_oids, lexical_units, role_oids,
)
from language.serializer import serialize_statement

OWL_PREFIXES = [
    ("owl", "http://www.w3.org/2002/07/owl#"),
    ("rdfs", "http://www.w3.org/2000/01/rdf-schema#"),
    ("xsd", "http://www.w3.org/2001/XMLSchema#"),
]
INDICATOR_PROPERTY = "indicator"


class IriMinter:
    """Maps OIDs and lexical units to IRIs under one base."""

    def __init__(self, base: str):
        self.base = base.rstrip("/")

    def oid(self, oid: Oid) -> str:
        base = (oid.iri_base or self.base).rstrip("/")
        return f"<{base}/{oid}>"

    def unit(self, unit: LexicalUnit) -> str:
        return f"<{self.base}/nl/{quote(unit.text, safe='')}@{unit.lang}>"

    def vocab(self, name: str) -> str:
        return f"<{self.base}/vocab#{name}>"


def _literal(text: str, lang: Optional[str] = None) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"@{lang}' if lang else f'"{escaped}"'


def class_expression(e: ConceptExpr, iris: IriMinter) -> str:
    if isinstance(e, Top):
        return "owl:Thing"
    if isinstance(e, Bottom):
        return "owl:Nothing"
    if isinstance(e, Atom):
        return iris.oid(e.oid)
    if isinstance(e, NlAtom):
        return iris.unit(e.unit)
    if isinstance(e, Not):
        return f"ObjectComplementOf({class_expression(e.operand, iris)})"
    if isinstance(e, (And, Or)):
        name = "ObjectIntersectionOf" if isinstance(e, And) else "ObjectUnionOf"
        return f"{name}({' '.join(class_expression(op, iris) for op in e.operands)})"
    if isinstance(e, (Exists, Forall)):
        name = "ObjectSomeValuesFrom" if isinstance(e, Exists) else "ObjectAllValuesFrom"
        return f"{name}({iris.oid(e.role)} {class_expression(e.filler, iris)})"
    raise TypeError(f"Unknown concept expression: {e!r}")


def owl_axiom(s: OidStatement, iris: IriMinter) -> str:
    axiom = translate(s)
    annotation = ""
    if s.indicator is Indicator.SYNTHETIC:
        annotation = f"Annotation({iris.vocab(INDICATOR_PROPERTY)} {_literal(Indicator.SYNTHETIC.value)}) "
    lhs, rhs = class_expression(axiom.lhs, iris), class_expression(axiom.rhs, iris)
    name = "EquivalentClasses" if isinstance(axiom, Equiv) else "SubClassOf"
    return f"{name}({annotation}{lhs} {rhs})"


def export_owl_functional(c: Collection, iri_base: str) -> str:
    """Declarations, label annotations, then one axiom per OID statement."""
    iris = IriMinter(c.iri_base or iri_base)
    statements = sorted_statements(c.oid_statements())

    classes: set[Oid] = set(c.oids())
    roles: set[Oid] = set()
    units: set[LexicalUnit] = set()
    for s in statements:
        classes |= class_oids(s.characterization)
        roles |= role_oids(s.characterization)
        units |= lexical_units(s.characterization)
    sorted_units = sorted(units, key=lambda u: (u.lang, u.text))

    lines: List[str] = [f"Prefix({name}:=<{iri}>)" for name, iri in OWL_PREFIXES]
    lines.append("")
    lines.append(f"Ontology(<{iris.base}>")
    if any(s.indicator is Indicator.SYNTHETIC for s in statements):
        lines.append(f"Declaration(AnnotationProperty({iris.vocab(INDICATOR_PROPERTY)}))")
    lines.extend(f"Declaration(Class({iris.oid(oid)}))" for oid in sorted(classes))
    lines.extend(f"Declaration(Class({iris.unit(unit)}))" for unit in sorted_units)
    lines.extend(f"Declaration(ObjectProperty({iris.oid(oid)}))" for oid in sorted(roles))
    lines.extend(
        f"AnnotationAssertion(rdfs:label {iris.unit(unit)} {_literal(unit.text, unit.lang)})"
        for unit in sorted_units
    )
    for oid in c.oids():
        lines.extend(
            f"AnnotationAssertion(rdfs:label {iris.oid(oid)} {_literal(hri.label, hri.lang)})"
            for hri in c.components[oid].hris
        )
    lines.extend(owl_axiom(s, iris) for s in statements)
    lines.append(")")
    return "\n".join(lines) + "\n"


def export_document(c: Collection, iri_base: str) -> ExportDocument:
    iris = IriMinter(c.iri_base or iri_base)
    components = []
    for oid in c.oids():
        component = c.components[oid]
        components.append(ExportedComponent(
            oid=str(oid),
            iri=iris.oid(oid).strip("<>"),
            labels=[_literal(hri.label, hri.lang) for hri in component.hris],
            metadata=component.metadata,
            statements=[
                ExportedStatement(
                    statement=serialize_statement(s),
                    indicator=s.indicator.value,
                    condition=s.condition.value,
                    axiom=render_axiom(translate(s)),
                )
                for s in sorted_statements(component.oid_statements)
            ],
        ))
    return ExportDocument(
        version=c.version_label,
        iri_base=iris.base,
        components=components,
        primitives=[str(oid) for oid in c.list_primitives()],
    )


def export_json(c: Collection, iri_base: str) -> str:
    return export_document(c, iri_base).model_dump_json(indent=2)
