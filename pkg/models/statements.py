"""
Statements, ontological components and collections.

This module contains the OID statement quadruplet, the OC statements that
carry human-readable identifiers and metadata, and the immutable collection
that groups components by OID.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Union

from models.terms import ConceptExpr, Oid, class_oids, normalize, role_oids


class Indicator(Enum):
    """Analytic/synthetic indicator of an OID statement."""
    ANALYTIC = "Analytic"
    SYNTHETIC = "Synthetic"


class Condition(Enum):
    """Condition type relating the subject to its characterization."""
    NC = "has_NC"
    SC = "has_SC"
    NSC = "has_NSC"


_CONDITION_ORDER = {Condition.NSC: 0, Condition.NC: 1, Condition.SC: 2}
_INDICATOR_ORDER = {Indicator.ANALYTIC: 0, Indicator.SYNTHETIC: 1, None: 2}


@dataclass(frozen=True)
class OidStatement:
    """
    ⟨subject OID, indicator, condition type, characterization⟩.

    The characterization is stored in canonical form, so dataclass equality
    is canonical equality. ``indicator`` is None only for reverse-translated
    statements whose indicator slot has not been filled yet.
    """
    subject: Oid
    indicator: Optional[Indicator]
    condition: Condition
    characterization: ConceptExpr

    def __post_init__(self):
        if not isinstance(self.subject, Oid):
            raise TypeError(f"Statement subject must be an Oid, got {self.subject!r}")
        object.__setattr__(self, "characterization", normalize(self.characterization))

    def with_indicator(self, indicator: Indicator) -> 'OidStatement':
        return OidStatement(self.subject, indicator, self.condition, self.characterization)

    def sort_key(self) -> tuple:
        return (
            self.subject.key,
            _CONDITION_ORDER[self.condition],
            _INDICATOR_ORDER[self.indicator],
            self.characterization.sort_key(),
        )

    @property
    def is_analytic(self) -> bool:
        return self.indicator is Indicator.ANALYTIC


@dataclass(frozen=True)
class Hri:
    """Human-readable identifier of an OID; never part of its meaning."""
    subject: Oid
    label: str
    lang: str

    def sort_key(self) -> tuple:
        return (self.subject.key, 0, self.lang, self.label)


@dataclass(frozen=True)
class Meta:
    """Metadata about a component, passed through untouched."""
    subject: Oid
    key: str
    value: str

    def sort_key(self) -> tuple:
        return (self.subject.key, 1, self.key, self.value)


OcStatement = Union[Hri, Meta]
Statement = Union[OidStatement, Hri, Meta]


def mentioned_oids(s: OidStatement) -> set[Oid]:
    """Every OID in the characterization, as class atom or as role."""
    return class_oids(s.characterization) | role_oids(s.characterization)


def sorted_statements(statements: Iterable[Statement]) -> list:
    return sorted(statements, key=lambda s: s.sort_key())


@dataclass(frozen=True)
class OntologicalComponent:
    """An OID plus its OID statements and OC statements."""
    oid: Oid
    oid_statements: frozenset = field(default_factory=frozenset)
    oc_statements: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "oid_statements", frozenset(self.oid_statements))
        object.__setattr__(self, "oc_statements", frozenset(self.oc_statements))
        for statement in (*self.oid_statements, *self.oc_statements):
            if statement.subject != self.oid:
                raise ValueError(
                    f"Statement subject {statement.subject} does not match component {self.oid}"
                )

    @property
    def hris(self) -> list[Hri]:
        return sorted_statements(s for s in self.oc_statements if isinstance(s, Hri))

    @property
    def metadata(self) -> dict[str, str]:
        return {s.key: s.value for s in sorted_statements(self.oc_statements) if isinstance(s, Meta)}

    def statements_with(self, condition: Condition) -> frozenset:
        return frozenset(s for s in self.oid_statements if s.condition is condition)

    def merged(self, other: 'OntologicalComponent') -> 'OntologicalComponent':
        if other.oid != self.oid:
            raise ValueError(f"Cannot merge {other.oid} into {self.oid}")
        return OntologicalComponent(
            self.oid,
            self.oid_statements | other.oid_statements,
            self.oc_statements | other.oc_statements,
        )


@dataclass(frozen=True, eq=False)
class Collection:
    """
    Immutable map from OID to ontological component.

    OIDs mentioned in characterizations without a component of their own are
    primitive references; they are allowed and enumerated by list_primitives.
    """
    components: Mapping[Oid, OntologicalComponent] = field(default_factory=dict)
    version_label: str = ""
    iri_base: Optional[str] = None

    def __post_init__(self):
        for oid, component in self.components.items():
            if component.oid != oid:
                raise ValueError(f"Component {component.oid} registered under {oid}")
        object.__setattr__(self, "components", MappingProxyType(dict(self.components)))

    @classmethod
    def of(cls, components: Iterable[OntologicalComponent], version_label: str = "",
           iri_base: Optional[str] = None) -> 'Collection':
        merged: dict[Oid, OntologicalComponent] = {}
        for component in components:
            if component.oid in merged:
                merged[component.oid] = merged[component.oid].merged(component)
            else:
                merged[component.oid] = component
        return cls(merged, version_label, iri_base)

    def __contains__(self, oid: Oid) -> bool:
        return oid in self.components

    def __len__(self) -> int:
        return len(self.components)

    def get(self, oid: Oid) -> Optional[OntologicalComponent]:
        return self.components.get(oid)

    def oids(self) -> list[Oid]:
        return sorted(self.components)

    def oid_statements(self) -> frozenset:
        return frozenset(s for c in self.components.values() for s in c.oid_statements)

    def oc_statements(self) -> frozenset:
        return frozenset(s for c in self.components.values() for s in c.oc_statements)

    def mentioned(self) -> set[Oid]:
        found: set[Oid] = set()
        for statement in self.oid_statements():
            found |= mentioned_oids(statement)
        return found

    def list_primitives(self) -> list[Oid]:
        """OIDs mentioned in characterizations that have no component."""
        return sorted(self.mentioned() - set(self.components))

    def knows(self, oid: Oid) -> bool:
        return oid in self.components or oid in self.mentioned()

    def merged(self, incoming: Iterable[OntologicalComponent]) -> 'Collection':
        return Collection.of(
            [*self.components.values(), *incoming], self.version_label, self.iri_base
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Collection):
            return NotImplemented
        return (dict(self.components) == dict(other.components)
                and self.version_label == other.version_label
                and self.iri_base == other.iri_base)

    __hash__ = None
