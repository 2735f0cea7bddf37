"""
Terms and concept expressions.

This module contains the ontological identifier, the lexical unit and the
concept expression tree used by every other module, together with the
canonical normal form that statement and axiom comparison relies on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Tuple, Union


OID_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9]*_[0-9]+")
LANG_TAG_PATTERN = re.compile(r"[A-Za-z]{1,8}(?:-[A-Za-z0-9]{1,8})*")


@dataclass(frozen=True)
class Oid:
    """Ontological identifier naming exactly one intensional relation."""
    prefix: str
    local: str
    iri_base: Optional[str] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not OID_PATTERN.fullmatch(f"{self.prefix}_{self.local}") or "_" in self.prefix:
            raise ValueError(f"Invalid OID parts: prefix={self.prefix!r} local={self.local!r}")

    @classmethod
    def parse(cls, text: str, iri_base: Optional[str] = None) -> 'Oid':
        """Parse the rendered form, e.g. ``OID_02`` or ``IAO_0000115``."""
        if not OID_PATTERN.fullmatch(text):
            raise ValueError(f"Not an OID: {text!r}")
        prefix, local = text.split("_", 1)
        return cls(prefix, local, iri_base)

    @property
    def key(self) -> Tuple[str, str]:
        return (self.prefix, self.local)

    def __str__(self) -> str:
        return f"{self.prefix}_{self.local}"

    def __lt__(self, other: 'Oid') -> bool:
        return self.key < other.key


@dataclass(frozen=True)
class LexicalUnit:
    """A natural-language string with its language tag, used as one atomic symbol."""
    text: str
    lang: str

    def __post_init__(self):
        if not self.text:
            raise ValueError("Lexical unit text must not be empty")
        if not LANG_TAG_PATTERN.fullmatch(self.lang):
            raise ValueError(f"Invalid language tag: {self.lang!r}")

    def __str__(self) -> str:
        return f"{quote_string(self.text)}@{self.lang}"


class ConceptExpr:
    """Base class of the concept expression tree."""

    rank: int = -1

    def sort_key(self) -> tuple:
        raise NotImplementedError

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, repr=False)
class Top(ConceptExpr):
    rank = 0

    def sort_key(self) -> tuple:
        return (self.rank,)

    def __repr__(self) -> str:
        return "Top()"


@dataclass(frozen=True, repr=False)
class Bottom(ConceptExpr):
    rank = 1

    def sort_key(self) -> tuple:
        return (self.rank,)

    def __repr__(self) -> str:
        return "Bottom()"


@dataclass(frozen=True, repr=False)
class Atom(ConceptExpr):
    oid: Oid
    rank = 2

    def sort_key(self) -> tuple:
        return (self.rank, self.oid.key)

    def __repr__(self) -> str:
        return f"Atom({self.oid})"


@dataclass(frozen=True, repr=False)
class NlAtom(ConceptExpr):
    unit: LexicalUnit
    rank = 3

    def sort_key(self) -> tuple:
        return (self.rank, (self.unit.lang, self.unit.text))

    def __repr__(self) -> str:
        return f"NlAtom({self.unit})"


@dataclass(frozen=True, repr=False)
class Not(ConceptExpr):
    operand: ConceptExpr
    rank = 4

    def sort_key(self) -> tuple:
        return (self.rank, self.operand.sort_key())

    def __repr__(self) -> str:
        return f"Not({self.operand!r})"


@dataclass(frozen=True, repr=False)
class Exists(ConceptExpr):
    role: Oid
    filler: ConceptExpr
    rank = 5

    def sort_key(self) -> tuple:
        return (self.rank, self.role.key, self.filler.sort_key())

    def __repr__(self) -> str:
        return f"Exists({self.role}, {self.filler!r})"


@dataclass(frozen=True, repr=False)
class Forall(ConceptExpr):
    role: Oid
    filler: ConceptExpr
    rank = 6

    def sort_key(self) -> tuple:
        return (self.rank, self.role.key, self.filler.sort_key())

    def __repr__(self) -> str:
        return f"Forall({self.role}, {self.filler!r})"


@dataclass(frozen=True, repr=False)
class And(ConceptExpr):
    operands: Tuple[ConceptExpr, ...]
    rank = 7

    def __post_init__(self):
        object.__setattr__(self, "operands", tuple(self.operands))
        if not self.operands:
            raise ValueError("And requires at least one operand")

    def sort_key(self) -> tuple:
        return (self.rank, tuple(op.sort_key() for op in self.operands))

    def __repr__(self) -> str:
        return f"And([{', '.join(repr(op) for op in self.operands)}])"


@dataclass(frozen=True, repr=False)
class Or(ConceptExpr):
    operands: Tuple[ConceptExpr, ...]
    rank = 8

    def __post_init__(self):
        object.__setattr__(self, "operands", tuple(self.operands))
        if not self.operands:
            raise ValueError("Or requires at least one operand")

    def sort_key(self) -> tuple:
        return (self.rank, tuple(op.sort_key() for op in self.operands))

    def __repr__(self) -> str:
        return f"Or([{', '.join(repr(op) for op in self.operands)}])"


Literal = Union[Atom, NlAtom]


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------

def normalize(e: ConceptExpr) -> ConceptExpr:
    """
    Return the canonical form of a concept expression.

    The result is in negation-normal form with double negations removed and
    with flattened, duplicate-free, totally ordered And/Or operand lists.
    Tautologies are not evaluated. The function is idempotent.
    """
    return _nnf(e, False)


def _nnf(e: ConceptExpr, negated: bool) -> ConceptExpr:
    if isinstance(e, Top):
        return Bottom() if negated else e
    if isinstance(e, Bottom):
        return Top() if negated else e
    if isinstance(e, (Atom, NlAtom)):
        return Not(e) if negated else e
    if isinstance(e, Not):
        return _nnf(e.operand, not negated)
    if isinstance(e, And):
        parts = [_nnf(op, negated) for op in e.operands]
        return _junction(Or if negated else And, parts)
    if isinstance(e, Or):
        parts = [_nnf(op, negated) for op in e.operands]
        return _junction(And if negated else Or, parts)
    if isinstance(e, Exists):
        filler = _nnf(e.filler, negated)
        return Forall(e.role, filler) if negated else Exists(e.role, filler)
    if isinstance(e, Forall):
        filler = _nnf(e.filler, negated)
        return Exists(e.role, filler) if negated else Forall(e.role, filler)
    raise TypeError(f"Unknown concept expression: {e!r}")


def _junction(kind, parts: Iterable[ConceptExpr]) -> ConceptExpr:
    flat = {}
    for part in parts:
        members = part.operands if isinstance(part, kind) else (part,)
        for member in members:
            flat[member] = None
    ordered = sorted(flat, key=lambda op: op.sort_key())
    if len(ordered) == 1:
        return ordered[0]
    return kind(tuple(ordered))


def is_normalized(e: ConceptExpr) -> bool:
    return normalize(e) == e


# ---------------------------------------------------------------------------
# Signature helpers
# ---------------------------------------------------------------------------

def subexpressions(e: ConceptExpr) -> Iterator[ConceptExpr]:
    """Yield e and all of its sub-expressions, pre-order."""
    yield e
    if isinstance(e, Not):
        yield from subexpressions(e.operand)
    elif isinstance(e, (And, Or)):
        for op in e.operands:
            yield from subexpressions(op)
    elif isinstance(e, (Exists, Forall)):
        yield from subexpressions(e.filler)


def class_oids(e: ConceptExpr) -> set[Oid]:
    return {sub.oid for sub in subexpressions(e) if isinstance(sub, Atom)}


def role_oids(e: ConceptExpr) -> set[Oid]:
    return {sub.role for sub in subexpressions(e) if isinstance(sub, (Exists, Forall))}


def lexical_units(e: ConceptExpr) -> set[LexicalUnit]:
    return {sub.unit for sub in subexpressions(e) if isinstance(sub, NlAtom)}


def has_roles(e: ConceptExpr) -> bool:
    return any(isinstance(sub, (Exists, Forall)) for sub in subexpressions(e))


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

_ASCII = {"not": "not ", "and": " and ", "or": " or ", "some": "some ", "only": "only ",
          "dot": " . ", "top": "top", "bottom": "bottom"}
_UNICODE = {"not": "¬", "and": " ⊓ ", "or": " ⊔ ", "some": "∃", "only": "∀",
            "dot": ".", "top": "⊤", "bottom": "⊥"}


def quote_string(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def render(e: ConceptExpr, unicode: bool = False) -> str:
    """
    Render an expression in the concept grammar.

    The ASCII rendering re-parses to the same canonical form; the Unicode
    rendering uses the usual description-logic notation.
    """
    symbols = _UNICODE if unicode else _ASCII
    return _render(e, symbols)


def _render(e: ConceptExpr, symbols: dict) -> str:
    if isinstance(e, Top):
        return symbols["top"]
    if isinstance(e, Bottom):
        return symbols["bottom"]
    if isinstance(e, Atom):
        return str(e.oid)
    if isinstance(e, NlAtom):
        return str(e.unit)
    if isinstance(e, Not):
        return symbols["not"] + _render_unary(e.operand, symbols)
    if isinstance(e, (Exists, Forall)):
        quant = symbols["some"] if isinstance(e, Exists) else symbols["only"]
        return f"{quant}{e.role}{symbols['dot']}{_render_unary(e.filler, symbols)}"
    if isinstance(e, (And, Or)):
        joiner = symbols["and"] if isinstance(e, And) else symbols["or"]
        return joiner.join(_render_operand(op, symbols) for op in e.operands)
    raise TypeError(f"Unknown concept expression: {e!r}")


def _render_unary(e: ConceptExpr, symbols: dict) -> str:
    if isinstance(e, (And, Or)):
        return f"({_render(e, symbols)})"
    return _render(e, symbols)


def _render_operand(e: ConceptExpr, symbols: dict) -> str:
    # nested junctions are always parenthesized
    return _render_unary(e, symbols)
