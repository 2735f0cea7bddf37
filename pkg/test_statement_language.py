#!/usr/bin/env python3
"""
Tests for the statement language: concept grammar, statement lines,
collection files and canonical serialization.
"""

import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent))

from language import (
    ConceptSyntaxError, ParseDiagnostic, Severity, parse_axiom, parse_collection, parse_concept, parse_statement,
    serialize_collection, serialize_statement,
)
from models.axioms import Equiv, Sub
from models.statements import Collection, Condition, Hri, Indicator, Meta, OidStatement, OntologicalComponent
from models.terms import And, Atom, Exists, Forall, LexicalUnit, NlAtom, Not, Oid, Or, Top, normalize, render
from test_core_model import exprs

FIXTURES = Path(__file__).parent / "fixtures"
OID_01, OID_02, OID_10, OID_11, OID_99 = (Oid.parse(f"OID_{n}") for n in ("01", "02", "10", "11", "99"))
APRICOT = NlAtom(LexicalUnit("A fruit of the tree Prunus armeniaca.", "en"))


def test_parse_concept_examples():
    assert parse_concept("OID_99 or not OID_99") == normalize(Or((Atom(OID_99), Not(Atom(OID_99)))))
    assert parse_concept("some OID_10 . OID_11") == Exists(OID_10, Atom(OID_11))
    assert parse_concept("top") == Top()


def test_unicode_aliases():
    assert parse_concept("∃OID_10.OID_11 ⊓ ¬OID_99") == parse_concept("some OID_10 . OID_11 and not OID_99")
    assert parse_concept("⊤ ⊔ ⊥") == parse_concept("top or bottom")
    assert parse_concept("∀OID_10.OID_11") == Forall(OID_10, Atom(OID_11))


def test_precedence():
    a, b, c = Atom(OID_01), Atom(OID_02), Atom(OID_99)
    assert parse_concept("not OID_01 and OID_02") == normalize(And((Not(a), b)))
    assert parse_concept("OID_01 or OID_02 and OID_99") == normalize(Or((a, And((b, c)))))
    assert parse_concept("some OID_10 . OID_01 and OID_02") == normalize(And((Exists(OID_10, a), b)))
    assert parse_concept("not (OID_01 or OID_02)") == normalize(And((Not(a), Not(b))))


def test_lexical_unit_atoms():
    assert parse_concept('"A fruit of the tree Prunus armeniaca."@en') == APRICOT
    assert parse_concept(r'"say \"hi\""@en-GB') == NlAtom(LexicalUnit('say "hi"', "en-GB"))


@pytest.mark.parametrize("text, code", [
    ('"unterminated@en', "lexical"),
    ('"coin"', "lexical"),
    ('"coin"@', "lexical"),
    ("OID_01 and", "syntax"),
    ("(OID_01", "syntax"),
    ("some . OID_01", "syntax"),
    ("OID_01 OID_02", "syntax"),
    ("apple", "lexical"),
])
def test_parse_concept_errors(text, code):
    with pytest.raises(ConceptSyntaxError) as info:
        parse_concept(text)
    assert info.value.code == code
    assert info.value.column >= 1


def test_syntax_error_column():
    with pytest.raises(ConceptSyntaxError) as info:
        parse_concept("OID_01 and )")
    assert info.value.column == 12


@settings(max_examples=200, deadline=None)
@given(exprs)
def test_rendering_reparses_to_canonical_form(e):
    assert parse_concept(render(e)) == normalize(e)
    assert parse_concept(render(e, unicode=True)) == normalize(e)


def test_parse_axiom():
    assert parse_axiom("some OID_28 . top sub some OID_10 . OID_11") == Sub(
        Exists(Oid.parse("OID_28"), Top()), Exists(OID_10, Atom(OID_11))
    )
    assert parse_axiom("OID_02 ≡ OID_01 ⊓ OID_99") == Equiv(Atom(OID_02), And((Atom(OID_01), Atom(OID_99))))
    with pytest.raises(ConceptSyntaxError):
        parse_axiom("OID_02 OID_01")


def test_parse_oid_statement():
    s = parse_statement('OID_02 | Analytic | has_NSC | "A fruit of the tree Prunus armeniaca."@en')
    assert s == OidStatement(OID_02, Indicator.ANALYTIC, Condition.NSC, APRICOT)


def test_whitespace_and_aliases():
    s = parse_statement("OID_02|A|has_NC|OID_01")
    assert s == OidStatement(OID_02, Indicator.ANALYTIC, Condition.NC, Atom(OID_01))
    assert parse_statement("  OID_02 |  Synthetical | has_SC |  OID_01  ").indicator is Indicator.SYNTHETIC


def test_parse_oc_statements():
    assert parse_statement('OID_02 | HRI | "apricot"@en') == Hri(OID_02, "apricot", "en")
    assert parse_statement("OID_02 | Meta | status | deprecated") == Meta(OID_02, "status", "deprecated")
    assert parse_statement('OID_02 | Meta | note | "a | b"') == Meta(OID_02, "note", "a | b")


def test_subject_must_be_an_oid():
    d = parse_statement('"A tropical fruit."@en | Analytic | has_NC | OID_01', line_no=7)
    assert isinstance(d, ParseDiagnostic)
    assert d.is_error
    assert d.message == "subject must be an OID"
    assert (d.line, d.column, d.code) == (7, 1, "bad-subject")


@pytest.mark.parametrize("line, code", [
    ("OID_02 | Analytic | has_NC", "field-count"),
    ("OID_02 | Maybe | has_NC | OID_01", "bad-indicator"),
    ("OID_02 | Analytic | has_XX | OID_01", "bad-condition"),
    ("OID_02 | Analytic | has_NC | OID_01 and", "syntax"),
    ('OID_02 | Analytic | has_NC | "open@en', "lexical"),
    ("OID_02 | HRI | OID_01", "bad-hri"),
    ("OID_02 | Meta | 9key | value", "bad-meta"),
    ("OID_02 | Analytic | has_NC | OID_01\nOID_03", "multiline"),
])
def test_statement_errors(line, code):
    d = parse_statement(line)
    assert isinstance(d, ParseDiagnostic)
    assert d.code == code


def test_error_column_points_into_characterization():
    d = parse_statement("OID_02 | Analytic | has_NC | OID_01 and )")
    assert d.column == len("OID_02 | Analytic | has_NC | OID_01 and ") + 1


def test_strict_profile():
    line = "OID_02 | Analytic | has_NC | only OID_10 . OID_11"
    assert isinstance(parse_statement(line), OidStatement)
    d = parse_statement(line, strict=True)
    assert d.code == "strict-profile"
    assert parse_statement("OID_02 | Analytic | has_NC | bottom", strict=True).code == "strict-profile"


def test_diagnostic_rendering():
    d = ParseDiagnostic(3, 5, Severity.WARNING, "Duplicate of line 1", "duplicate")
    assert d.render("ex.ocs") == "WARNING ex.ocs:3:5 duplicate Duplicate of line 1"


def test_parse_fixture_collection():
    collection, diagnostics = parse_collection((FIXTURES / "apricot.ocs").read_text(encoding="utf-8"))
    assert diagnostics == []
    assert collection.version_label == "1.0"
    assert [str(o) for o in collection.oids()] == ["OID_01", "OID_02", "OID_03", "OID_99"]
    assert collection.list_primitives() == [OID_10]
    assert len(collection.get(OID_02).oid_statements) == 4
    assert collection.get(OID_02).hris == [Hri(OID_02, "apricot", "en")]


def test_collection_duplicates_pragmas_and_errors():
    text = "\ufeff@version 2\r\n@base http://example.org/fruit\r\n@author me\r\n" \
           "OID_02 | A | has_NC | OID_01\r\n" \
           "OID_02 | Analytic | has_NC | not not OID_01\r\n" \
           "# comment\r\n\r\n" \
           '"A tropical fruit."@en | Analytic | has_NC | OID_01\r\n' \
           "@base\r\n"
    collection, diagnostics = parse_collection(text)
    assert collection.version_label == "2"
    assert collection.iri_base == "http://example.org/fruit"
    assert collection.oids()[0].iri_base == "http://example.org/fruit"
    assert [(d.line, d.severity, d.code) for d in diagnostics] == [
        (3, Severity.WARNING, "unknown-pragma"),
        (5, Severity.WARNING, "duplicate"),
        (8, Severity.ERROR, "bad-subject"),
        (9, Severity.ERROR, "bad-pragma"),
    ]
    assert diagnostics[1].message == "Duplicate of line 4"
    assert len(collection.get(OID_02).oid_statements) == 1


def test_hri_collision_warning():
    text = 'OID_01 | HRI | "fruit"@en\nOID_02 | HRI | "fruit"@en\nOID_02 | HRI | "fruit"@fr\n'
    _, diagnostics = parse_collection(text)
    assert [(d.line, d.code) for d in diagnostics] == [(2, "hri-collision")]


def test_serialize_statement():
    s = OidStatement(OID_02, Indicator.ANALYTIC, Condition.NC, Not(Atom(OID_99)))
    assert serialize_statement(s) == "OID_02 | Analytic | has_NC | not OID_99"
    assert serialize_statement(s, unicode=True) == "OID_02 | Analytic | has_NC | ¬OID_99"
    unfilled = OidStatement(OID_02, None, Condition.SC, Exists(OID_10, Atom(OID_11)))
    assert serialize_statement(unfilled) == "OID_02 | ? | has_SC | some OID_10 . OID_11"
    assert serialize_statement(Hri(OID_02, "apricot", "en")) == 'OID_02 | HRI | "apricot"@en'
    assert serialize_statement(Meta(OID_02, "note", 'say "hi"')) == r'OID_02 | Meta | note | "say \"hi\""'


def test_serialized_statements_reparse():
    collection, _ = parse_collection((FIXTURES / "apricot.ocs").read_text(encoding="utf-8"))
    for statement in collection.oid_statements() | collection.oc_statements():
        assert parse_statement(serialize_statement(statement)) == statement


def test_collection_serialization_reloads():
    collection, _ = parse_collection((FIXTURES / "apricot.ocs").read_text(encoding="utf-8"))
    text = serialize_collection(collection)
    assert text.startswith("@version 1.0\n")
    reloaded, diagnostics = parse_collection(text)
    assert diagnostics == []
    assert reloaded == collection
    assert serialize_collection(reloaded) == text


@pytest.mark.parametrize("separator", ["\u2028", "\u0085", "\x0b", "\x0c", "\x1e"])
def test_collection_lines_split_on_newline_only(separator):
    line = f'OID_02 | Analytic | has_NC | "first{separator}second"@en'
    expected = parse_statement(line)
    assert expected.characterization == NlAtom(LexicalUnit(f"first{separator}second", "en"))
    collection, diagnostics = parse_collection(f"{line}\r\nOID_02 | Analytic | has_NC | OID_01 and\n")
    assert [(d.line, d.severity) for d in diagnostics] == [(2, Severity.ERROR)]
    assert collection.get(OID_02).oid_statements == {expected}


QUOTED_TEXT = st.text(alphabet='ab "\\|@.#é\u2028', min_size=1, max_size=12)


@settings(max_examples=150, deadline=None)
@given(unit=QUOTED_TEXT, label=QUOTED_TEXT, value=QUOTED_TEXT)
def test_escapes_round_trip(unit, label, value):
    statements = [
        OidStatement(OID_02, Indicator.ANALYTIC, Condition.NC, NlAtom(LexicalUnit(unit, "en"))),
        Hri(OID_02, label, "en"),
        Meta(OID_02, "note", value),
    ]
    for statement in statements:
        assert parse_statement(serialize_statement(statement)) == statement
    collection = Collection.of([OntologicalComponent(OID_02, statements[:1], statements[1:])])
    reloaded, diagnostics = parse_collection(serialize_collection(collection))
    assert [d for d in diagnostics if d.is_error] == []
    assert reloaded == collection


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
