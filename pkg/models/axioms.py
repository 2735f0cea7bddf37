"""
Description-logic axioms and TBoxes.

Both axiom variants store their sides in canonical form, so dataclass
equality is canonical equality and sets of axioms deduplicate correctly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from models.terms import (
    And, ConceptExpr, LexicalUnit, Oid, Or, class_oids, lexical_units, normalize, render, role_oids,
)


@dataclass(frozen=True)
class Sub:
    """lhs ⊑ rhs"""
    lhs: ConceptExpr
    rhs: ConceptExpr

    def __post_init__(self):
        object.__setattr__(self, "lhs", normalize(self.lhs))
        object.__setattr__(self, "rhs", normalize(self.rhs))

    def sort_key(self) -> tuple:
        return (0, self.lhs.sort_key(), self.rhs.sort_key())


@dataclass(frozen=True)
class Equiv:
    """lhs ≡ rhs, i.e. Sub(lhs, rhs) and Sub(rhs, lhs)."""
    lhs: ConceptExpr
    rhs: ConceptExpr

    def __post_init__(self):
        object.__setattr__(self, "lhs", normalize(self.lhs))
        object.__setattr__(self, "rhs", normalize(self.rhs))

    def split(self) -> tuple[Sub, Sub]:
        return Sub(self.lhs, self.rhs), Sub(self.rhs, self.lhs)

    def sort_key(self) -> tuple:
        return (1, self.lhs.sort_key(), self.rhs.sort_key())


DlAxiom = Union[Sub, Equiv]


def render_axiom(a: DlAxiom, unicode: bool = False) -> str:
    if unicode:
        op = " ⊑ " if isinstance(a, Sub) else " ≡ "
    else:
        op = " sub " if isinstance(a, Sub) else " equiv "
    return f"{_side(a.lhs, unicode)}{op}{_side(a.rhs, unicode)}"


def _side(e: ConceptExpr, unicode: bool) -> str:
    text = render(e, unicode)
    return f"({text})" if isinstance(e, (And, Or)) else text


def sorted_axioms(axioms: Iterable[DlAxiom]) -> list[DlAxiom]:
    return sorted(axioms, key=lambda a: a.sort_key())


@dataclass(frozen=True)
class Signature:
    classes: frozenset = field(default_factory=frozenset)
    roles: frozenset = field(default_factory=frozenset)
    units: frozenset = field(default_factory=frozenset)

    @property
    def class_names(self) -> frozenset:
        """OID class atoms and lexical units, the propositional variables of the oracle."""
        return self.classes | self.units


@dataclass(frozen=True)
class Tbox:
    """A finite set of canonical axioms; immutable and shareable between queries."""
    axioms: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "axioms", frozenset(self.axioms))

    @classmethod
    def of(cls, axioms: Iterable[DlAxiom]) -> 'Tbox':
        return cls(frozenset(axioms))

    @property
    def signature(self) -> Signature:
        classes: set[Oid] = set()
        roles: set[Oid] = set()
        units: set[LexicalUnit] = set()
        for axiom in self.axioms:
            for side in (axiom.lhs, axiom.rhs):
                classes |= class_oids(side)
                roles |= role_oids(side)
                units |= lexical_units(side)
        return Signature(frozenset(classes), frozenset(roles), frozenset(units))

    def extended(self, axioms: Iterable[DlAxiom]) -> 'Tbox':
        return Tbox(self.axioms | frozenset(axioms))

    def __len__(self) -> int:
        return len(self.axioms)
