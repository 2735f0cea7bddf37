"""
Recursive-descent parser for concept expressions and axioms.

Grammar (precedence: not > some/only > and > or):

    expr  := or
    or    := and ( ("or" | "⊔") and )*
    and   := unary ( ("and" | "⊓") unary )*
    unary := ("not" | "¬") unary | quant | atom | "(" expr ")"
    quant := ("some" | "∃") OID "." unary | ("only" | "∀") OID "." unary
    atom  := OID | STRING "@" LANGTAG | ("top" | "⊤") | ("bottom" | "⊥")
    axiom := expr ("sub" | "⊑" | "equiv" | "≡") expr
"""

from __future__ import annotations

from typing import Optional

from language.lexer import ConceptSyntaxError, Token, tokenize
from models.axioms import DlAxiom, Equiv, Sub
from models.terms import (
    And, Atom, Bottom, ConceptExpr, Exists, Forall, LexicalUnit, NlAtom, Not, Oid, Or, Top,
    normalize, subexpressions,
)


class _Parser:

    def __init__(self, tokens: list[Token], iri_base: Optional[str] = None):
        self.tokens = tokens
        self.pos = 0
        self.iri_base = iri_base

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str, what: str) -> Token:
        token = self.current
        if token.kind != kind:
            found = token.text or "end of input"
            raise ConceptSyntaxError(f"Expected {what}, found {found!r}", token.column)
        return self.advance()

    def parse_or(self) -> ConceptExpr:
        operands = [self.parse_and()]
        while self.current.kind == "OR":
            self.advance()
            operands.append(self.parse_and())
        return operands[0] if len(operands) == 1 else Or(tuple(operands))

    def parse_and(self) -> ConceptExpr:
        operands = [self.parse_unary()]
        while self.current.kind == "AND":
            self.advance()
            operands.append(self.parse_unary())
        return operands[0] if len(operands) == 1 else And(tuple(operands))

    def parse_unary(self) -> ConceptExpr:
        token = self.current
        if token.kind == "NOT":
            self.advance()
            return Not(self.parse_unary())
        if token.kind in ("SOME", "ONLY"):
            self.advance()
            role = self.expect("OID", "a role OID")
            self.expect("DOT", "'.'")
            filler = self.parse_unary()
            node = Exists if token.kind == "SOME" else Forall
            return node(Oid.parse(role.text, self.iri_base), filler)
        if token.kind == "LPAREN":
            self.advance()
            inner = self.parse_or()
            self.expect("RPAREN", "')'")
            return inner
        if token.kind == "OID":
            self.advance()
            return Atom(Oid.parse(token.text, self.iri_base))
        if token.kind == "STRING":
            self.advance()
            if not token.text:
                raise ConceptSyntaxError("Lexical unit must not be empty", token.column, "lexical")
            return NlAtom(LexicalUnit(token.text, token.lang))
        if token.kind == "TOP":
            self.advance()
            return Top()
        if token.kind == "BOTTOM":
            self.advance()
            return Bottom()
        found = token.text or "end of input"
        raise ConceptSyntaxError(f"Expected a concept, found {found!r}", token.column)

    def finish(self):
        if self.current.kind != "EOF":
            raise ConceptSyntaxError(f"Unexpected {self.current.text!r}", self.current.column)


def parse_concept_raw(text: str, offset: int = 0, iri_base: Optional[str] = None) -> ConceptExpr:
    """Parse without normalizing; ``offset`` shifts reported columns."""
    parser = _Parser(tokenize(text, offset), iri_base)
    expr = parser.parse_or()
    parser.finish()
    return expr


def parse_concept(text: str, offset: int = 0, iri_base: Optional[str] = None) -> ConceptExpr:
    """Parse a concept expression and return its canonical form."""
    return normalize(parse_concept_raw(text, offset, iri_base))


def parse_axiom(text: str, iri_base: Optional[str] = None) -> DlAxiom:
    """Parse ``C sub D`` / ``C ⊑ D`` or ``C equiv D`` / ``C ≡ D``."""
    parser = _Parser(tokenize(text), iri_base)
    lhs = parser.parse_or()
    operator = parser.current
    if operator.kind not in ("SUB", "EQUIV"):
        raise ConceptSyntaxError("Expected 'sub' or 'equiv'", operator.column)
    parser.advance()
    rhs = parser.parse_or()
    parser.finish()
    return Sub(lhs, rhs) if operator.kind == "SUB" else Equiv(lhs, rhs)


def uses_extended_profile(e: ConceptExpr) -> Optional[str]:
    """Name the first construct outside the strict profile (bottom, only), if any."""
    for sub in subexpressions(e):
        if isinstance(sub, Bottom):
            return "bottom"
        if isinstance(sub, Forall):
            return "only"
    return None
