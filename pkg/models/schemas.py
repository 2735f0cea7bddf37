"""
Schema definitions for ontocomp.

This module contains the JSON schemas of every ``--json`` output and of the
JSON export. Command outputs are validated against them in the test suite.
"""

from typing import Any, Dict

_STRING_LIST: Dict[str, Any] = {"type": "array", "items": {"type": "string"}}
_OID: Dict[str, Any] = {"type": "string", "pattern": "^[A-Za-z][A-Za-z0-9]*_[0-9]+$"}

_DELTA: Dict[str, Any] = {
    "type": "object",
    "required": ["added", "removed"],
    "properties": {
        "added": _STRING_LIST,
        "removed": _STRING_LIST
    },
    "additionalProperties": False
}

_EBMS: Dict[str, Any] = {
    "type": "object",
    "required": ["oid", "coherent", "asserted", "inferred", "non_reverse_translatable"],
    "properties": {
        "oid": _OID,
        "coherent": {"type": "boolean"},
        "asserted": _STRING_LIST,
        "inferred": _STRING_LIST,
        "non_reverse_translatable": _STRING_LIST,
        "theory": {"anyOf": [_STRING_LIST, {"type": "null"}]},
        "primitives": {"anyOf": [{"type": "array", "items": _OID}, {"type": "null"}]}
    },
    "additionalProperties": False
}

EBMS_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Entailment-based meaning specification",
    **_EBMS
}

EBMS_LIST_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Meaning specifications of several components",
    "type": "array",
    "items": _EBMS
}

IMPACT_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Import impact report",
    "type": "object",
    "required": ["imported", "affected", "coherence_breaks", "conflicts", "verdict"],
    "properties": {
        "imported": {"type": "array", "items": _OID},
        "affected": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["oid", "verdict", "ebms_before", "ebms_after", "delta"],
                "properties": {
                    "oid": _OID,
                    "verdict": {"$ref": "#/$defs/verdict"},
                    "ebms_before": _EBMS,
                    "ebms_after": _EBMS,
                    "delta": _DELTA
                },
                "additionalProperties": False
            }
        },
        "coherence_breaks": {"type": "array", "items": _OID},
        "conflicts": {"type": "object", "additionalProperties": _STRING_LIST},
        "verdict": {"$ref": "#/$defs/verdict"}
    },
    "additionalProperties": False,
    "$defs": {
        "verdict": {"type": "string", "enum": ["NoChange", "Extended", "MeaningAltered", "IncoherenceIntroduced"]}
    }
}

DIFF_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Component diff reports",
    "type": "array",
    "items": {
        "type": "object",
        "required": ["oid", "kind", "ebms_delta", "oc_delta", "detail"],
        "properties": {
            "oid": _OID,
            "kind": {
                "type": "string",
                "enum": ["Identical", "AnnotationOnly", "SyntheticOrSufficientOnly", "MeaningAffecting", "Incoherent"]
            },
            "ebms_delta": _DELTA,
            "oc_delta": _DELTA,
            "detail": _STRING_LIST
        },
        "additionalProperties": False
    }
}

EXPORT_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Ontological component collection export",
    "type": "object",
    "required": ["version", "iri_base", "components", "primitives"],
    "properties": {
        "version": {"type": "string"},
        "iri_base": {"type": "string"},
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["oid", "iri", "labels", "metadata", "statements"],
                "properties": {
                    "oid": _OID,
                    "iri": {"type": "string"},
                    "labels": _STRING_LIST,
                    "metadata": {"type": "object", "additionalProperties": {"type": "string"}},
                    "statements": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["statement", "indicator", "condition", "axiom"],
                            "properties": {
                                "statement": {"type": "string"},
                                "indicator": {"type": "string", "enum": ["Analytic", "Synthetic"]},
                                "condition": {"type": "string", "enum": ["has_NC", "has_SC", "has_NSC"]},
                                "axiom": {"type": "string"}
                            },
                            "additionalProperties": False
                        }
                    }
                },
                "additionalProperties": False
            }
        },
        "primitives": {"type": "array", "items": _OID}
    },
    "additionalProperties": False
}
