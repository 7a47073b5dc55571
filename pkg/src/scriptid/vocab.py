"""Script profiles of tokenizer vocabularies and UNK statistics.

Tokenizers are not run here: vocabularies and tokenized documents are read
from files produced elsewhere.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .identify import identify_many
from .ucd import SPECIAL_CODES, UNKNOWN, ScriptRangeTable

# Leading subword markers: WordPiece continuation, SentencePiece space,
# byte-level BPE space.
DEFAULT_MARKERS = ("##", "▁", "Ġ")

# Common spellings of the unknown token, used to catch a missing --unk.
KNOWN_UNK_MARKERS = frozenset({"<unk>", "[UNK]", "<UNK>", "[unk]"})

UNK_EXCLUSION_THRESHOLD = Fraction(5, 100)

_BYTE_TOKEN = re.compile(r"^<0x[0-9A-Fa-f]{2}>$")


def strip_markers(token: str, markers: Sequence[str] = DEFAULT_MARKERS) -> str:
    """Remove one leading subword marker, the first in ``markers`` that matches."""
    for marker in markers:
        if marker and token.startswith(marker):
            return token[len(marker):]
    return token


def is_byte_token(token: str) -> bool:
    return bool(_BYTE_TOKEN.match(token))


@dataclass(frozen=True)
class VocabScriptProfile:
    counts: Mapping[str, int]
    size: int

    @property
    def percentages(self) -> dict[str, Fraction]:
        return {code: Fraction(n, self.size) for code, n in self.counts.items()}

    @property
    def scripts_present(self) -> int:
        return sum(1 for code in self.counts if code not in SPECIAL_CODES)

    def rows(self) -> list[tuple[str, int, Fraction]]:
        """``(code, tokens, share)`` sorted by descending count, then code."""
        pct = self.percentages
        return [(c, self.counts[c], pct[c]) for c in sorted(self.counts, key=lambda c: (-self.counts[c], c))]


def vocab_script_distribution(
    vocab: Iterable[str],
    table: ScriptRangeTable | None = None,
    markers: Sequence[str] = DEFAULT_MARKERS,
) -> VocabScriptProfile:
    """Tally tokens by main script.

    Byte-fallback tokens and tokens left empty by marker stripping count as
    Zzzz.
    """
    tokens = list(vocab)
    if not tokens:
        raise ValueError("vocabulary is empty")
    stripped = ["" if is_byte_token(t) else strip_markers(t, markers) for t in tokens]
    mains = identify_many(stripped, table).main_scripts()
    counts = Counter(UNKNOWN if m is None else m for m in mains)
    return VocabScriptProfile(dict(counts), len(tokens))


@dataclass(frozen=True)
class TokenizationStats:
    doc_id: str
    token_count: int
    unk_count: int

    @property
    def unk_fraction(self) -> Fraction:
        return Fraction(self.unk_count, self.token_count)

    @property
    def excluded(self) -> bool:
        """Pairs with 5% or more unknown tokens are left out of comparisons."""
        return is_excluded(self.unk_fraction)


def is_excluded(unk_fraction: Fraction) -> bool:
    return unk_fraction >= UNK_EXCLUSION_THRESHOLD


def tokenization_stats(
    docs: Iterable[tuple[str, Sequence[str]]], unk_marker: str | None
) -> list[TokenizationStats]:
    out = []
    for doc_id, tokens in docs:
        if not tokens:
            raise ValueError(f"document {doc_id!r} has no tokens")
        if unk_marker is None:
            found = KNOWN_UNK_MARKERS.intersection(tokens)
            if found:
                raise ValueError(
                    f"document {doc_id!r} contains {sorted(found)[0]!r} but no UNK marker was given"
                )
            unk = 0
        else:
            unk = sum(1 for t in tokens if t == unk_marker)
        out.append(TokenizationStats(doc_id, len(tokens), unk))
    return out


def cost_ratio(a: TokenizationStats | int, b: TokenizationStats | int) -> float:
    """How many times more tokens ``b`` needs than ``a``."""
    na = a.token_count if isinstance(a, TokenizationStats) else a
    nb = b.token_count if isinstance(b, TokenizationStats) else b
    if na <= 0:
        raise ZeroDivisionError("reference document has no tokens")
    return nb / na


# -- file formats -----------------------------------------------------------
#
# Vocabulary text file: one token per line, UTF-8. Escapes:
#   \n newline   \t tab   \r carriage return   \\ backslash   \s space
#   \uXXXX / \UXXXXXXXX any codepoint
# A JSON file holding either a list of tokens or a {token: id} object is
# also accepted.

_VOCAB_ESCAPE = re.compile(r"\\(u[0-9A-Fa-f]{4}|U[0-9A-Fa-f]{8}|.)")
_SIMPLE = {"n": "\n", "t": "\t", "r": "\r", "\\": "\\", "s": " "}


def unescape_token(text: str) -> str:
    def sub(m: re.Match) -> str:
        esc = m.group(1)
        if esc[0] in "uU" and len(esc) > 1:
            return chr(int(esc[1:], 16))
        return _SIMPLE.get(esc, m.group(0))

    return _VOCAB_ESCAPE.sub(sub, text)


def escape_token(token: str) -> str:
    out = []
    for ch in token:
        if ch == "\\":
            out.append("\\\\")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\t":
            out.append("\\t")
        elif ch == "\r":
            out.append("\\r")
        elif ch == " ":
            out.append("\\s")
        elif ord(ch) < 0x20 or 0xD800 <= ord(ch) <= 0xDFFF:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def parse_vocab(text: str, json_format: bool = False) -> list[str]:
    if json_format:
        data = json.loads(text)
        if isinstance(data, dict):
            return [tok for tok, _ in sorted(data.items(), key=lambda kv: kv[1])]
        if isinstance(data, list):
            return [str(t) for t in data]
        raise ValueError("JSON vocabulary must be a list or an object")
    return [unescape_token(line) for line in text.split("\n") if line != ""]


def parse_docs_line(line: str, lineno: int = 0) -> tuple[str, list[str]]:
    """``doc_id<TAB>tok tok tok`` -> ``(doc_id, tokens)``."""
    doc_id, sep, rest = line.rstrip("\r\n").partition("\t")
    if not sep or not doc_id:
        raise ValueError(f"line {lineno}: expected '<doc_id><TAB><tokens>'")
    return doc_id, rest.split()
