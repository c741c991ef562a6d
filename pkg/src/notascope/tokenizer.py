"""Deterministic tokenization of normalized spec text plus vocabulary stats.

A single generic lexer covers every supported syntax family; per-language
configuration supplies quote characters, comment markers, keyword sets,
and multi-character operators (matched maximal-munch). Grammar-driven
tokenizers can be registered under new ids as long as they honor the same
determinism and coverage contract.
"""

from __future__ import annotations

import hashlib
import json
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from .errors import LexError, UnknownNotation, UnknownTokenizer
from .gallery import Gallery

TOKEN_KINDS = ("identifier", "keyword", "number", "string", "punctuation", "operator", "comment", "other")


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    start: int  # byte offset into normalized_text
    end: int

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(frozen=True)
class TokenStream:
    notation_id: str
    example_id: str
    tokens: tuple[Token, ...]

    def lexemes(self, include_comments: bool = False) -> list[str]:
        return [t.lexeme for t in self.tokens if include_comments or t.kind != "comment"]


@dataclass(frozen=True)
class LanguageConfig:
    """Lexical parameters for one syntax family."""

    quote_chars: tuple[str, ...] = ('"', "'")
    escape_char: str = "\\"
    line_comments: tuple[str, ...] = ()
    block_comments: tuple[tuple[str, str], ...] = ()
    operators: tuple[str, ...] = ()
    keywords: frozenset[str] = frozenset()


_PY_OPERATORS = (
    "**=", "//=", ">>=", "<<=", "...", "==", "!=", "<=", ">=", "->", "+=", "-=",
    "*=", "/=", "%=", "&=", "|=", "^=", "**", "//", "<<", ">>", ":=",
)

_JS_OPERATORS = (
    "===", "!==", ">>>", "**=", "...", "=>", "==", "!=", "<=", ">=", "&&", "||",
    "??", "++", "--", "+=", "-=", "*=", "/=", "%=", "**", "<<", ">>",
)

_R_OPERATORS = (
    "%in%", "%>%", "<<-", "->>", "<-", "->", "==", "!=", "<=", ">=", "&&", "||", "::", ":::",
)

LANGUAGE_CONFIGS: dict[str, LanguageConfig] = {
    "generic": LanguageConfig(),
    "python-like": LanguageConfig(
        line_comments=("#",),
        operators=_PY_OPERATORS,
        keywords=frozenset(
            "False None True and as assert async await break class continue def del elif else "
            "except finally for from global if import in is lambda nonlocal not or pass raise "
            "return try while with yield".split()
        ),
    ),
    "r-like": LanguageConfig(
        line_comments=("#",),
        operators=_R_OPERATORS,
        keywords=frozenset(
            "if else repeat while function for in next break TRUE FALSE NULL Inf NaN NA library".split()
        ),
    ),
    "json-like": LanguageConfig(quote_chars=('"',)),
    "javascript-like": LanguageConfig(
        quote_chars=('"', "'", "`"),
        line_comments=("//",),
        block_comments=(("/*", "*/"),),
        operators=_JS_OPERATORS,
        keywords=frozenset(
            "break case catch class const continue debugger default delete do else export extends "
            "false finally for function if import in instanceof let new null of return static super "
            "switch this throw true try typeof var void while with yield".split()
        ),
    ),
}

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER_RE = re.compile(r"\d+(?:\.\d+)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?")


def _lex(text: str, cfg: LanguageConfig) -> list[Token]:
    # offsets are byte offsets into the UTF-8 form; lex over the decoded
    # string but track byte positions so spans slice normalized bytes
    data = text.encode("utf-8")
    tokens: list[Token] = []
    i = 0  # byte index
    n = len(data)
    ops = sorted(cfg.operators, key=len, reverse=True)

    def char_at(pos: int) -> str:
        return chr(data[pos]) if pos < n else ""

    while i < n:
        c = char_at(i)
        if c in " \t\n\r\f\v":
            i += 1
            continue
        # comments
        matched = False
        for marker in cfg.line_comments:
            mb = marker.encode()
            if data.startswith(mb, i):
                end = data.find(b"\n", i)
                end = n if end == -1 else end
                tokens.append(Token("comment", data[i:end].decode("utf-8"), i, end))
                i = end
                matched = True
                break
        if matched:
            continue
        for open_m, close_m in cfg.block_comments:
            ob, cb = open_m.encode(), close_m.encode()
            if data.startswith(ob, i):
                end = data.find(cb, i + len(ob))
                if end == -1:
                    raise LexError(i, f"unterminated block comment (missing {close_m!r})")
                end += len(cb)
                tokens.append(Token("comment", data[i:end].decode("utf-8"), i, end))
                i = end
                matched = True
                break
        if matched:
            continue
        # strings (delimiters included in the lexeme)
        if c in cfg.quote_chars:
            j = i + 1
            while j < n:
                cj = char_at(j)
                if cj == cfg.escape_char and j + 1 < n:
                    j += 2
                    continue
                if cj == c:
                    break
                j += 1
            else:
                raise LexError(i, "unterminated string literal")
            if j >= n:
                raise LexError(i, "unterminated string literal")
            tokens.append(Token("string", data[i : j + 1].decode("utf-8"), i, j + 1))
            i = j + 1
            continue
        # numbers (ASCII only, so byte-slice matching is safe)
        if c.isdigit() or (c == "." and i + 1 < n and char_at(i + 1).isdigit()):
            mb = _NUMBER_RE.match(data[i : i + 64].decode("ascii", "replace"))
            assert mb is not None
            lex = mb.group(0)
            tokens.append(Token("number", lex, i, i + len(lex)))
            i += len(lex)
            continue
        # identifiers / keywords
        if c.isalpha() or c == "_" or data[i] >= 0x80:
            j = i
            while j < n:
                b = data[j]
                if b >= 0x80 or chr(b).isalnum() or chr(b) == "_":
                    j += 1
                else:
                    break
            lex = data[i:j].decode("utf-8")
            kind = "keyword" if lex in cfg.keywords else "identifier"
            tokens.append(Token(kind, lex, i, j))
            i = j
            continue
        # multi-character operators, maximal munch
        for op in ops:
            ob = op.encode()
            if data.startswith(ob, i):
                tokens.append(Token("operator", op, i, i + len(ob)))
                i += len(ob)
                matched = True
                break
        if matched:
            continue
        # anything else: single-character punctuation
        tokens.append(Token("punctuation", c, i, i + 1))
        i += 1
    return tokens


Lexer = Callable[[str], list[Token]]

_REGISTRY: dict[str, Lexer] = {}


def register_tokenizer(tokenizer_id: str, lexer: Lexer) -> None:
    _REGISTRY[tokenizer_id] = lexer


def tokenizer_registered(tokenizer_id: str) -> bool:
    return tokenizer_id in _REGISTRY


def _make_lexer(cfg: LanguageConfig) -> Lexer:
    return lambda text: _lex(text, cfg)


for _lang, _cfg in LANGUAGE_CONFIGS.items():
    register_tokenizer(_lang, _make_lexer(_cfg))


def apply_overrides(path: str | Path) -> None:
    """Merge a tokenizers.json override file into the registry.

    Schema: {language_id: {quote_chars?, line_comments?, block_comments?,
    operators?, keywords?}}. Unknown language ids create new entries based
    on the generic config.
    """
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    for lang, over in raw.items():
        base = LANGUAGE_CONFIGS.get(lang, LANGUAGE_CONFIGS["generic"])
        cfg = LanguageConfig(
            quote_chars=tuple(over.get("quote_chars", base.quote_chars)),
            escape_char=over.get("escape_char", base.escape_char),
            line_comments=tuple(over.get("line_comments", base.line_comments)),
            block_comments=tuple(tuple(bc) for bc in over.get("block_comments", base.block_comments)),
            operators=tuple(over.get("operators", base.operators)),
            keywords=frozenset(over.get("keywords", base.keywords)),
        )
        LANGUAGE_CONFIGS[lang] = cfg
        register_tokenizer(lang, _make_lexer(cfg))


def registry_digest() -> str:
    """Stable digest of the tokenizer registry configuration."""
    h = hashlib.sha256()
    for lang in sorted(LANGUAGE_CONFIGS):
        cfg = LANGUAGE_CONFIGS[lang]
        h.update(
            json.dumps(
                {
                    "lang": lang,
                    "quotes": cfg.quote_chars,
                    "escape": cfg.escape_char,
                    "line": cfg.line_comments,
                    "block": cfg.block_comments,
                    "ops": cfg.operators,
                    "kw": sorted(cfg.keywords),
                },
                sort_keys=True,
            ).encode()
        )
    return h.hexdigest()


def tokenize(text: str, tokenizer_id: str, notation_id: str = "", example_id: str = "") -> TokenStream:
    """Tokenize normalized text under the registered tokenizer."""
    if tokenizer_id not in _REGISTRY:
        raise UnknownTokenizer(tokenizer_id)
    return TokenStream(
        notation_id=notation_id,
        example_id=example_id,
        tokens=tuple(_REGISTRY[tokenizer_id](text)),
    )


def gallery_streams(gallery: Gallery, notation_id: str) -> list[TokenStream]:
    cfg = gallery.notation(notation_id)
    return [
        tokenize(spec.normalized_text, cfg.tokenizer_id, notation_id, spec.example_id)
        for spec in gallery.notation_specs(notation_id)
    ]


@dataclass(frozen=True)
class VocabularyReport:
    notation_id: str
    unique_count: int
    frequency_histogram: dict[int, int] = field(default_factory=dict)
    lexeme_counts: dict[str, int] = field(default_factory=dict)


def vocabulary_of_streams(notation_id: str, streams: Iterable[TokenStream]) -> VocabularyReport:
    counts: Counter[str] = Counter()
    for stream in streams:
        counts.update(stream.lexemes())
    histogram: Counter[int] = Counter(counts.values())
    return VocabularyReport(
        notation_id=notation_id,
        unique_count=len(counts),
        frequency_histogram=dict(sorted(histogram.items())),
        lexeme_counts=dict(counts),
    )


def vocabulary(gallery: Gallery, notation_id: str) -> VocabularyReport:
    """Distinct lexemes (comments excluded) over all of a notation's specs."""
    if notation_id not in gallery.notation_ids:
        raise UnknownNotation(notation_id)
    return vocabulary_of_streams(notation_id, gallery_streams(gallery, notation_id))
