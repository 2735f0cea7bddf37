#!/usr/bin/env python3
"""
End-to-end tests for the ontocomp command line.

Every command is driven through main(argv); results are read from stdout and
diagnostics from stderr.
"""

import json
import sys
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent))

from language import parse_statement
from models.reports import DiffReport, EbmsOutput, ExportDocument, ImpactReport
from models.schemas import DIFF_SCHEMA, EBMS_LIST_SCHEMA, EBMS_SCHEMA, EXPORT_SCHEMA, IMPACT_SCHEMA
from models.statements import Condition, Indicator, OidStatement
from models.terms import Atom, Exists, Oid, Top
from ontocomp_cli import ExitCode, main

FIXTURES = Path(__file__).parent / "fixtures"
APRICOT = str(FIXTURES / "apricot.ocs")
APRICOT_TEXT = (FIXTURES / "apricot.ocs").read_text(encoding="utf-8")
CONTRADICTION = "OID_02 | Analytic | has_NC | OID_99\n"
EX5 = "OID_02 | Analytic | has_NC | OID_01\n"
EX6 = 'OID_02 | Synthetic | has_NC | "Contains vitamin A."@en\n'

GOLDEN = [
    'A: OID_02 | Analytic | has_NSC | "A fruit of the tree Prunus armeniaca."@en',
    "A: OID_02 | Analytic | has_NC | OID_01",
    'I: OID_02 | Analytic | has_NC | "A mature ovary of a seed-bearing plant."@en',
    "I: OID_02 | Analytic | has_NC | not OID_99",
]


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ("ONTOCOMP_NODE_BUDGET", "ONTOCOMP_WORKERS", "ONTOCOMP_STRICT", "ONTOCOMP_VERBOSE",
                 "ONTOCOMP_REPORT_MODE", "ONTOCOMP_IRI_BASE", "ONTOCOMP_ORACLE_MAX_ATOMS"):
        monkeypatch.delenv(name, raising=False)


def write(tmp_path: Path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def run(capsys, *argv: str):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------

def test_validate_reports_primitives(capsys):
    code, out, _ = run(capsys, "validate", APRICOT)
    assert code == ExitCode.OK
    assert out.splitlines() == [f"INFO {APRICOT}:0:0 primitives Primitive references: OID_10"]


def test_validate_reports_parse_errors(capsys, tmp_path):
    path = write(tmp_path, "bad.ocs", '"A tropical fruit."@en | Analytic | has_NC | OID_01\n')
    code, out, _ = run(capsys, "validate", path)
    assert code == ExitCode.INPUT_ERROR
    assert out.startswith(f"ERROR {path}:1:1 bad-subject")


def test_validate_coherence(capsys, tmp_path):
    path = write(tmp_path, "merged.ocs", APRICOT_TEXT + CONTRADICTION)
    assert run(capsys, "validate", APRICOT, "--coherence")[0] == ExitCode.OK
    code, out, _ = run(capsys, "validate", path, "--coherence")
    assert code == ExitCode.INCOHERENT
    assert f"ERROR {path}:0:0 incoherent OID_02 is unsatisfiable under its analytic theory" in out.splitlines()


def test_strict_profile_flag(capsys, tmp_path):
    path = write(tmp_path, "only.ocs", "OID_02 | Analytic | has_NC | only OID_10 . OID_11\n")
    assert run(capsys, "validate", path)[0] == ExitCode.OK
    code, out, _ = run(capsys, "validate", path, "--strict")
    assert code == ExitCode.INPUT_ERROR
    assert "strict-profile" in out


def test_missing_file_is_an_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "absent.ocs"))
    assert code == ExitCode.IO_ERROR
    assert "Cannot read" in err


def test_usage_errors_exit_with_input_error():
    with pytest.raises(SystemExit) as info:
        main(["ebms"])
    assert info.value.code == ExitCode.INPUT_ERROR


# ---------------------------------------------------------------------------
# ebms
# ---------------------------------------------------------------------------

def test_ebms_golden_output(capsys):
    code, out, err = run(capsys, "ebms", APRICOT, "--oid", "OID_02")
    assert code == ExitCode.OK
    assert out.splitlines() == GOLDEN
    assert err == ""


def test_ebms_is_deterministic(capsys):
    first = run(capsys, "ebms", APRICOT, "--all")
    second = run(capsys, "ebms", APRICOT, "--all", "--workers", "1")
    assert first == second


def test_ebms_asserted_only_and_theory(capsys):
    _, out, _ = run(capsys, "ebms", APRICOT, "--oid", "OID_02", "--asserted-only")
    assert out.splitlines() == GOLDEN[:2]
    _, out, _ = run(capsys, "ebms", APRICOT, "--oid", "OID_02", "--show-theory")
    lines = out.splitlines()
    assert [line for line in lines if line.startswith("T: ")] == [
        'T: OID_01 | Analytic | has_NSC | "A mature ovary of a seed-bearing plant."@en',
        "T: OID_01 | Analytic | has_NC | not OID_99",
        'T: OID_02 | Analytic | has_NSC | "A fruit of the tree Prunus armeniaca."@en',
        "T: OID_02 | Analytic | has_NC | OID_01",
        "T: OID_99 | Analytic | has_NC | not OID_10",
    ]
    assert "P: OID_10" in lines
    assert lines[-4:] == GOLDEN


def test_ebms_unicode(capsys):
    _, out, _ = run(capsys, "ebms", APRICOT, "--oid", "OID_02", "--unicode")
    assert out.splitlines()[-1] == "I: OID_02 | Analytic | has_NC | ¬OID_99"


def test_ebms_all_has_headers(capsys):
    code, out, _ = run(capsys, "ebms", APRICOT, "--all")
    assert code == ExitCode.OK
    headers = [line for line in out.splitlines() if line.startswith("# ")]
    assert headers == ["# OID_01", "# OID_02", "# OID_03", "# OID_99"]


def test_ebms_unknown_oid(capsys):
    code, _, err = run(capsys, "ebms", APRICOT, "--oid", "OID_42")
    assert code == ExitCode.INPUT_ERROR
    assert "OID_42" in err
    assert run(capsys, "ebms", APRICOT, "--oid", "not-an-oid")[0] == ExitCode.INPUT_ERROR
    assert run(capsys, "ebms", APRICOT)[0] == ExitCode.INPUT_ERROR


def test_ebms_primitive_reference(capsys):
    code, out, _ = run(capsys, "ebms", APRICOT, "--oid", "OID_10")
    assert code == ExitCode.OK
    assert out == ""


def test_ebms_incoherent(capsys, tmp_path):
    path = write(tmp_path, "merged.ocs", APRICOT_TEXT + CONTRADICTION)
    code, out, _ = run(capsys, "ebms", path, "--oid", "OID_02")
    lines = out.splitlines()
    assert code == ExitCode.INCOHERENT
    assert lines[0] == "INCOHERENT OID_02"
    assert not [line for line in lines if line.startswith("I: ")]


def test_ebms_json(capsys):
    code, out, _ = run(capsys, "ebms", APRICOT, "--oid", "OID_02", "--json", "--show-theory")
    assert code == ExitCode.OK
    Draft202012Validator(EBMS_SCHEMA).validate(json.loads(out))
    output = EbmsOutput.model_validate_json(out)
    assert output.asserted + output.inferred == [line[3:] for line in GOLDEN]
    assert output.primitives == ["OID_10"]
    assert len(output.theory) == 5


def test_ebms_all_json(capsys):
    _, out, _ = run(capsys, "ebms", APRICOT, "--all", "--json")
    document = json.loads(out)
    Draft202012Validator(EBMS_LIST_SCHEMA).validate(document)
    assert [entry["oid"] for entry in document] == ["OID_01", "OID_02", "OID_03", "OID_99"]


def test_ebms_report_mode(capsys):
    _, out, _ = run(capsys, "ebms", str(FIXTURES / "prunus.ocs"), "--oid", "OID_02", "--report")
    assert 'N: "A fruit of the tree Prunus armeniaca."@en sub "A mature ovary of a seed-bearing plant."@en' \
        in out.splitlines()


def test_node_budget_option(capsys, tmp_path):
    path = write(tmp_path, "roles.ocs", "OID_02 | Analytic | has_NC | some OID_28 . OID_11\n")
    assert run(capsys, "ebms", path, "--oid", "OID_02")[0] == ExitCode.OK
    code, _, err = run(capsys, "ebms", path, "--oid", "OID_02", "--node-budget", "1")
    assert code == ExitCode.INPUT_ERROR
    assert "node budget of 1" in err


def test_verbose_status_goes_to_stderr(capsys):
    _, out, err = run(capsys, "--verbose", "ebms", APRICOT, "--oid", "OID_02")
    assert out.splitlines() == GOLDEN
    assert "Loading" in err


# ---------------------------------------------------------------------------
# diff
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("edit, kind, code", [
    (lambda text: text.replace(EX6, ""), "SyntheticOrSufficientOnly", ExitCode.OK),
    (lambda text: text.replace('"apricot"@en', '"Apricot"@en'), "AnnotationOnly", ExitCode.OK),
    (lambda text: text.replace(EX5, ""), "MeaningAffecting", ExitCode.MEANING_CHANGED),
    (lambda text: text, "Identical", ExitCode.OK),
])
def test_diff_exit_codes(capsys, tmp_path, edit, kind, code):
    v2 = write(tmp_path, "v2.ocs", edit(APRICOT_TEXT))
    result, out, _ = run(capsys, "diff", APRICOT, v2, "--oid", "OID_02")
    assert result == code
    assert out.splitlines()[:2] == ["oid: OID_02", f"kind: {kind}"]


def test_diff_all_json(capsys, tmp_path):
    v2 = write(tmp_path, "v2.ocs", APRICOT_TEXT.replace(EX5, ""))
    code, out, _ = run(capsys, "diff", APRICOT, v2, "--json")
    assert code == ExitCode.MEANING_CHANGED
    document = json.loads(out)
    Draft202012Validator(DIFF_SCHEMA).validate(document)
    reports = [DiffReport.model_validate(entry) for entry in document]
    assert [r.oid for r in reports] == ["OID_01", "OID_02", "OID_03", "OID_99"]
    assert reports[1].kind.value == "MeaningAffecting"


# ---------------------------------------------------------------------------
# import-check
# ---------------------------------------------------------------------------

def _split_fixture(tmp_path):
    lines = APRICOT_TEXT.splitlines(keepends=True)
    base = write(tmp_path, "base.ocs", "".join(line for line in lines if not line.startswith("OID_02")))
    incoming = write(tmp_path, "incoming.ocs", "".join(line for line in lines if line.startswith("OID_02")))
    return base, incoming


def test_import_check_extended(capsys, tmp_path):
    base, incoming = _split_fixture(tmp_path)
    code, out, _ = run(capsys, "import-check", base, incoming)
    assert code == ExitCode.OK
    lines = out.splitlines()
    assert lines[:2] == ["verdict: Extended", "imported: OID_02"]
    assert "affected: OID_02" in lines
    assert "  added: OID_02 | Analytic | has_NC | not OID_99" in lines


def test_import_check_incoherence(capsys, tmp_path):
    incoming = write(tmp_path, "contradiction.ocs", CONTRADICTION)
    code, out, _ = run(capsys, "import-check", APRICOT, incoming)
    assert code == ExitCode.INCOHERENT
    assert "coherence_break: OID_02" in out.splitlines()


def test_import_check_empty_and_conflicting(capsys, tmp_path):
    empty = write(tmp_path, "empty.ocs", "# nothing to import\n")
    code, out, _ = run(capsys, "import-check", APRICOT, empty)
    assert code == ExitCode.OK
    assert out.splitlines() == ["verdict: NoChange"]

    conflicting = write(tmp_path, "conflict.ocs", 'OID_02 | Analytic | has_NSC | "A stone fruit."@en\n')
    _, out, _ = run(capsys, "import-check", APRICOT, conflicting)
    assert 'CONFLICT OID_02: OID_02 | Analytic | has_NSC | "A stone fruit."@en' in out.splitlines()


def test_import_check_json(capsys, tmp_path):
    base, incoming = _split_fixture(tmp_path)
    _, out, _ = run(capsys, "import-check", base, incoming, "--json")
    Draft202012Validator(IMPACT_SCHEMA).validate(json.loads(out))
    report = ImpactReport.model_validate_json(out)
    assert report.verdict.value == "Extended"
    assert report.affected["OID_02"].ebms_after.statements == {line[3:] for line in GOLDEN}


# ---------------------------------------------------------------------------
# export and reify
# ---------------------------------------------------------------------------

def test_export_owl_functional(capsys):
    code, out, _ = run(capsys, "export", APRICOT, "--iri-base", "http://example.org/base")
    assert code == ExitCode.OK
    lines = out.splitlines()
    assert lines[0] == "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)"
    assert "Ontology(<http://example.org/base>" in lines
    assert "SubClassOf(<http://example.org/base/OID_02> <http://example.org/base/OID_01>)" in lines
    assert ("EquivalentClasses(<http://example.org/base/OID_02> "
            "<http://example.org/base/nl/A%20fruit%20of%20the%20tree%20Prunus%20armeniaca.@en>)") in lines
    assert 'AnnotationAssertion(rdfs:label <http://example.org/base/OID_02> "apricot"@en)' in lines
    assert any(line.startswith("SubClassOf(Annotation(<http://example.org/base/vocab#indicator> \"Synthetic\")")
               for line in lines)
    assert lines[-1] == ")"


def test_export_empty_collection(capsys, tmp_path):
    path = write(tmp_path, "empty.ocs", "@version 0\n")
    _, out, _ = run(capsys, "export", path, "--iri-base", "http://example.org/base")
    assert out.splitlines() == [
        "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)",
        "Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)",
        "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)",
        "",
        "Ontology(<http://example.org/base>",
        ")",
    ]


def test_export_json(capsys):
    code, out, _ = run(capsys, "export", APRICOT, "--format", "json")
    assert code == ExitCode.OK
    Draft202012Validator(EXPORT_SCHEMA).validate(json.loads(out))
    document = ExportDocument.model_validate_json(out)
    assert document.version == "1.0"
    assert document.primitives == ["OID_10"]
    assert [c.oid for c in document.components] == ["OID_01", "OID_02", "OID_03", "OID_99"]


def test_reify(capsys):
    code, out, _ = run(capsys, "reify", "--axiom", "some OID_28 . top sub some OID_10 . OID_11", "--fresh", "OID_50")
    assert code == ExitCode.OK
    fresh = Oid.parse("OID_50")
    assert [parse_statement(line) for line in out.splitlines()] == [
        OidStatement(fresh, Indicator.ANALYTIC, Condition.NSC, Exists(Oid.parse("OID_28"), Top())),
        OidStatement(fresh, Indicator.ANALYTIC, Condition.NC, Exists(Oid.parse("OID_10"), Atom(Oid.parse("OID_11")))),
    ]


def test_reify_errors(capsys):
    assert run(capsys, "reify", "--axiom", "OID_02 sub OID_01", "--fresh", "OID_50")[0] == ExitCode.INPUT_ERROR
    assert run(capsys, "reify", "--axiom", "OID_02 sub", "--fresh", "OID_50")[0] == ExitCode.INPUT_ERROR
    code, _, err = run(capsys, "reify", APRICOT, "--axiom", "some OID_28 . top sub OID_03 or OID_04",
                       "--fresh", "OID_01")
    assert code == ExitCode.INPUT_ERROR
    assert "already in use" in err


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
