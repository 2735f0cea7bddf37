"""
Tokenizer for the concept-expression grammar.

ASCII keywords have Unicode aliases (¬ ⊓ ⊔ ∃ ∀ ⊤ ⊥ ⊑ ≡). Lexical units are
double-quoted strings with ``\\"`` and ``\\\\`` escapes followed by a
mandatory ``@lang`` tag.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from models.terms import LANG_TAG_PATTERN, OID_PATTERN


class ConceptSyntaxError(ValueError):
    """Lexical or syntax error in a concept expression; column is 1-based."""

    def __init__(self, message: str, column: int, code: str = "syntax"):
        super().__init__(f"{message} (column {column})")
        self.message = message
        self.column = column
        self.code = code


KEYWORDS = {
    "not": "NOT", "¬": "NOT",
    "and": "AND", "⊓": "AND",
    "or": "OR", "⊔": "OR",
    "some": "SOME", "∃": "SOME",
    "only": "ONLY", "∀": "ONLY",
    "top": "TOP", "⊤": "TOP",
    "bottom": "BOTTOM", "⊥": "BOTTOM",
    "sub": "SUB", "⊑": "SUB",
    "equiv": "EQUIV", "≡": "EQUIV",
}

_WORD = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_LANG = re.compile(r"[A-Za-z0-9-]*")
_SYMBOLS = {"(": "LPAREN", ")": "RPAREN", ".": "DOT"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int  # 1-based, relative to the tokenized text
    lang: Optional[str] = None


def tokenize(text: str, offset: int = 0) -> list[Token]:
    """
    Split text into tokens; ``offset`` is added to every column.

    Raises ConceptSyntaxError on unterminated strings, bad escapes, missing or
    malformed language tags and unknown characters.
    """
    tokens: list[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        column = offset + i + 1
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(_SYMBOLS[ch], ch, column))
            i += 1
            continue
        if ch in KEYWORDS:
            tokens.append(Token(KEYWORDS[ch], ch, column))
            i += 1
            continue
        if ch == '"':
            value, i = _read_string(text, i, offset)
            if i >= len(text) or text[i] != "@":
                raise ConceptSyntaxError("Lexical unit requires a language tag", offset + i + 1, "lexical")
            tag_match = _LANG.match(text, i + 1)
            tag = tag_match.group(0)
            if not LANG_TAG_PATTERN.fullmatch(tag):
                raise ConceptSyntaxError(f"Bad language tag {tag!r}", offset + i + 1, "lexical")
            tokens.append(Token("STRING", value, column, tag))
            i = tag_match.end()
            continue
        word = _WORD.match(text, i)
        if word:
            lexeme = word.group(0)
            if lexeme in KEYWORDS:
                tokens.append(Token(KEYWORDS[lexeme], lexeme, column))
            elif OID_PATTERN.fullmatch(lexeme):
                tokens.append(Token("OID", lexeme, column))
            else:
                raise ConceptSyntaxError(f"Unknown word {lexeme!r}", column, "lexical")
            i = word.end()
            continue
        raise ConceptSyntaxError(f"Unexpected character {ch!r}", column, "lexical")
    tokens.append(Token("EOF", "", offset + len(text) + 1))
    return tokens


def _read_string(text: str, start: int, offset: int) -> tuple[str, int]:
    chars: list[str] = []
    i = start + 1
    while i < len(text):
        ch = text[i]
        if ch == "\\":
            if i + 1 < len(text) and text[i + 1] in '"\\':
                chars.append(text[i + 1])
                i += 2
                continue
            raise ConceptSyntaxError("Bad escape in string", offset + i + 1, "lexical")
        if ch == '"':
            return "".join(chars), i + 1
        chars.append(ch)
        i += 1
    raise ConceptSyntaxError("Unterminated string", offset + start + 1, "lexical")


def read_quoted(text: str) -> Optional[tuple[str, str]]:
    """Read a whole field of the form "..."@lang; None if it is not one."""
    tokens = tokenize(text)
    if len(tokens) == 2 and tokens[0].kind == "STRING":
        return tokens[0].text, tokens[0].lang
    return None
