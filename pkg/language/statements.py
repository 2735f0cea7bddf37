"""
OID statement line parser.

Line syntax (whitespace around pipes is insignificant):

    OID | Analytic|Synthetic | has_NC|has_SC|has_NSC | characterization
    OID | HRI  | "label"@lang
    OID | Meta | key | value
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from language.lexer import ConceptSyntaxError, read_quoted
from language.parser import parse_concept_raw, uses_extended_profile
from models.statements import Condition, Hri, Indicator, Meta, OcStatement, OidStatement
from models.terms import OID_PATTERN, Oid


class Severity(Enum):
    ERROR = "ERROR"
    WARNING = "WARNING"
    INFO = "INFO"


@dataclass(frozen=True)
class ParseDiagnostic:
    """A located message about one input line; columns are 1-based."""
    line: int
    column: int
    severity: Severity
    message: str
    code: str

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def render(self, source: str = "<input>") -> str:
        return f"{self.severity.value} {source}:{self.line}:{self.column} {self.code} {self.message}"


INDICATORS = {
    "Analytic": Indicator.ANALYTIC, "Analytical": Indicator.ANALYTIC, "A": Indicator.ANALYTIC,
    "Synthetic": Indicator.SYNTHETIC, "Synthetical": Indicator.SYNTHETIC, "S": Indicator.SYNTHETIC,
}
CONDITIONS = {condition.value: condition for condition in Condition}
META_KEY_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_.:-]*")


@dataclass(frozen=True)
class _Field:
    text: str
    column: int  # 1-based column of the first non-blank character


def split_fields(line: str) -> list[_Field]:
    """Split on pipes that are not inside double-quoted strings."""
    fields: list[_Field] = []
    start = 0
    in_string = False
    i = 0
    while i <= len(line):
        at_end = i == len(line)
        ch = "" if at_end else line[i]
        if in_string:
            if ch == "\\":
                i += 2
                continue
            if ch == '"':
                in_string = False
        elif ch == '"':
            in_string = True
        elif ch == "|" or at_end:
            raw = line[start:i]
            stripped = raw.lstrip()
            fields.append(_Field(stripped.rstrip(), start + (len(raw) - len(stripped)) + 1))
            start = i + 1
        i += 1
    if in_string:
        # unterminated string swallowed the rest of the line; keep one field for it
        raw = line[start:]
        stripped = raw.lstrip()
        fields.append(_Field(stripped.rstrip(), start + (len(raw) - len(stripped)) + 1))
    return fields


def _error(line_no: int, column: int, message: str, code: str) -> ParseDiagnostic:
    return ParseDiagnostic(line_no, column, Severity.ERROR, message, code)


def parse_statement(line: str, line_no: int = 1, strict: bool = False,
                    iri_base: Optional[str] = None) -> Union[OidStatement, OcStatement, ParseDiagnostic]:
    """
    Parse one logical line into an OID statement or an OC statement.

    Errors are returned as a ParseDiagnostic whose column points inside the
    offending field or token.
    """
    if "\n" in line or "\r" in line:
        return _error(line_no, 1, "Statement must be a single line", "multiline")
    fields = split_fields(line)
    if len(fields) < 3 or len(fields) > 4:
        return _error(line_no, 1, f"Expected 3 or 4 pipe-separated fields, found {len(fields)}", "field-count")

    subject_field, kind_field = fields[0], fields[1]
    if not OID_PATTERN.fullmatch(subject_field.text):
        return _error(line_no, subject_field.column, "subject must be an OID", "bad-subject")
    subject = Oid.parse(subject_field.text, iri_base)

    if kind_field.text == "HRI":
        if len(fields) != 3:
            return _error(line_no, kind_field.column, "HRI statement takes exactly one label field", "field-count")
        return _parse_hri(subject, fields[2], line_no)
    if kind_field.text == "Meta":
        if len(fields) != 4:
            return _error(line_no, kind_field.column, "Meta statement takes a key and a value", "field-count")
        return _parse_meta(subject, fields[2], fields[3], line_no)

    if kind_field.text not in INDICATORS:
        return _error(line_no, kind_field.column, f"Unknown indicator {kind_field.text!r}", "bad-indicator")
    if len(fields) != 4:
        return _error(line_no, kind_field.column, "OID statement takes exactly four fields", "field-count")
    condition_field, char_field = fields[2], fields[3]
    if condition_field.text not in CONDITIONS:
        return _error(line_no, condition_field.column,
                      f"Unknown condition type {condition_field.text!r}", "bad-condition")
    if not char_field.text:
        return _error(line_no, char_field.column, "Characterization is empty", "syntax")
    try:
        raw = parse_concept_raw(char_field.text, offset=char_field.column - 1, iri_base=iri_base)
    except ConceptSyntaxError as exc:
        return _error(line_no, exc.column, exc.message, exc.code)
    if strict:
        construct = uses_extended_profile(raw)
        if construct:
            return _error(line_no, char_field.column,
                          f"'{construct}' is not allowed in the strict profile", "strict-profile")
    return OidStatement(subject, INDICATORS[kind_field.text], CONDITIONS[condition_field.text], raw)


def _parse_hri(subject: Oid, label_field: _Field, line_no: int) -> Union[Hri, ParseDiagnostic]:
    try:
        quoted = read_quoted(label_field.text)
    except ConceptSyntaxError as exc:
        return _error(line_no, label_field.column + exc.column - 1, exc.message, exc.code)
    if quoted is None or not quoted[0]:
        return _error(line_no, label_field.column, 'HRI must be a non-empty "label"@lang string', "bad-hri")
    return Hri(subject, quoted[0], quoted[1])


def _parse_meta(subject: Oid, key_field: _Field, value_field: _Field,
                line_no: int) -> Union[Meta, ParseDiagnostic]:
    if not META_KEY_PATTERN.fullmatch(key_field.text):
        return _error(line_no, key_field.column, f"Bad metadata key {key_field.text!r}", "bad-meta")
    value = value_field.text
    if value.startswith('"'):
        if len(value) < 2 or not value.endswith('"'):
            return _error(line_no, value_field.column, "Unterminated string", "lexical")
        value = _unescape(value[1:-1])
    return Meta(subject, key_field.text, value)


def _unescape(body: str) -> str:
    return re.sub(r'\\(["\\])', r"\1", body)
