"""Unicode Character Database ingestion and the codepoint -> script table.

``Scripts.txt`` assigns Script property long names to codepoint ranges and
``PropertyValueAliases.txt`` maps those names to ISO 15924 codes. The two
are combined into a :class:`ScriptRangeTable`, an immutable sorted interval
map that answers ``lookup(cp)`` for every Unicode scalar value.
"""

from __future__ import annotations

import hashlib
import re
from bisect import bisect_right
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Mapping, NamedTuple, Sequence

MAX_CODEPOINT = 0x10FFFF

COMMON = "Zyyy"
INHERITED = "Zinh"
UNKNOWN = "Zzzz"
SPECIAL_CODES = frozenset({COMMON, INHERITED, UNKNOWN})

# Overrides applied on top of the UCD assignment. U+FFFD is Common in
# Scripts.txt; it only ever appears as a decoding substitute, so it is
# reported as Unknown.
DEFAULT_OVERRIDES: Mapping[int, str] = {0xFFFD: UNKNOWN}

UNICODE_VERSION = "15.0.0"
SCRIPTS_FILE = f"Scripts-{UNICODE_VERSION}.txt"
ALIASES_FILE = f"PropertyValueAliases-{UNICODE_VERSION}.txt"

TABLE_FORMAT = "scriptid-table"
TABLE_FORMAT_VERSION = 1

_CODE_RE = re.compile(r"^[A-Z][a-z]{3}$")
_HEX_RE = re.compile(r"^[0-9A-Fa-f]{4,6}$")


class UcdParseError(ValueError):
    """A UCD or table file could not be parsed."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where = f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class TableBuildError(ValueError):
    """Entries and aliases cannot be combined into a consistent table."""


class UcdScriptEntry(NamedTuple):
    range_start: int
    range_end: int
    property_value: str


class ScriptAlias(NamedTuple):
    long_name: str
    code: str


def is_script_code(code: str) -> bool:
    return bool(_CODE_RE.match(code))


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_codepoint(text: str, lineno: int, source: str | None) -> int:
    text = text.strip()
    if not _HEX_RE.match(text):
        raise UcdParseError(f"malformed codepoint {text!r}", lineno, source)
    cp = int(text, 16)
    if cp > MAX_CODEPOINT:
        raise UcdParseError(f"codepoint {text} is beyond U+10FFFF", lineno, source)
    return cp


def parse_scripts_file(text: str, source: str | None = None) -> list[UcdScriptEntry]:
    """Parse ``Scripts.txt`` content into one entry per data line."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        fields = [f.strip() for f in line.split(";")]
        if len(fields) != 2 or not fields[0] or not fields[1]:
            raise UcdParseError("expected '<range> ; <script>'", lineno, source)
        span, name = fields
        if ".." in span:
            lo, hi = span.split("..", 1)
            start = _parse_codepoint(lo, lineno, source)
            end = _parse_codepoint(hi, lineno, source)
        else:
            start = end = _parse_codepoint(span, lineno, source)
        if start > end:
            raise UcdParseError(f"range start {start:04X} exceeds end {end:04X}", lineno, source)
        entries.append(UcdScriptEntry(start, end, name))
    return entries


def parse_aliases_file(text: str, source: str | None = None) -> list[ScriptAlias]:
    """Extract the Script (``sc``) aliases from ``PropertyValueAliases.txt``.

    Lines for other properties are skipped. A long name or code that maps
    to two different partners is an error.
    """
    aliases: list[ScriptAlias] = []
    by_name: dict[str, str] = {}
    by_code: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        fields = [f.strip() for f in line.split(";")]
        if fields[0] != "sc":
            continue
        if len(fields) < 3 or not fields[1] or not fields[2]:
            raise UcdParseError("expected 'sc ; <code> ; <long name>'", lineno, source)
        code, name = fields[1], fields[2]
        if not is_script_code(code):
            raise UcdParseError(f"{code!r} is not a four-letter script code", lineno, source)
        if by_name.get(name, code) != code:
            raise UcdParseError(f"{name} maps to both {by_name[name]} and {code}", lineno, source)
        if by_code.get(code, name) != name:
            raise UcdParseError(f"{code} maps to both {by_code[code]} and {name}", lineno, source)
        if name in by_name:
            continue
        by_name[name] = code
        by_code[code] = name
        aliases.append(ScriptAlias(name, code))
    return aliases


@dataclass(frozen=True, eq=False)
class ScriptRangeTable:
    """Sorted, non-overlapping ``(start, end, code)`` intervals plus overrides.

    Codepoints outside every interval resolve to :data:`UNKNOWN`.
    """

    entries: tuple[tuple[int, int, str], ...]
    overrides: Mapping[int, str] = field(default_factory=lambda: dict(DEFAULT_OVERRIDES))
    unicode_version: str | None = None
    default_code: str = UNKNOWN

    def __post_init__(self):
        object.__setattr__(self, "_starts", [e[0] for e in self.entries])

    def lookup(self, cp: int) -> str:
        code = self.overrides.get(cp)
        if code is not None:
            return code
        i = bisect_right(self._starts, cp) - 1
        if i >= 0:
            start, end, code = self.entries[i]
            if cp <= end:
                return code
        return self.default_code

    def codes(self) -> set[str]:
        """Every code the table can return."""
        return {e[2] for e in self.entries} | set(self.overrides.values()) | {self.default_code}

    def scripts(self) -> set[str]:
        """Proper scripts, i.e. :meth:`codes` without Zyyy, Zinh and Zzzz."""
        return self.codes() - SPECIAL_CODES

    def check(self) -> None:
        """Assert sortedness and non-overlap in a single pass."""
        prev_end = -1
        for start, end, code in self.entries:
            if not (prev_end < start <= end <= MAX_CODEPOINT):
                raise TableBuildError(f"entry {start:04X}..{end:04X} {code} is out of order")
            prev_end = end

    def checksum(self) -> str:
        return hashlib.sha256(dumps_table(self).encode("utf-8")).hexdigest()


def lookup(table: ScriptRangeTable, cp: int) -> str:
    return table.lookup(cp)


def build_table(
    entries: Iterable[UcdScriptEntry],
    aliases: Iterable[ScriptAlias],
    overrides: Mapping[int, str] = DEFAULT_OVERRIDES,
    merge: bool = True,
    unicode_version: str | None = None,
) -> ScriptRangeTable:
    """Resolve long names to codes, sort, check for overlap, merge neighbours."""
    codes = {a.long_name: a.code for a in aliases}
    resolved = []
    for e in entries:
        try:
            code = codes[e.property_value]
        except KeyError:
            raise TableBuildError(f"unknown script property value {e.property_value!r}") from None
        resolved.append((e.range_start, e.range_end, code))
    resolved.sort()

    out: list[tuple[int, int, str]] = []
    for start, end, code in resolved:
        if out and start <= out[-1][1]:
            prev = out[-1]
            raise TableBuildError(
                f"{start:04X}..{end:04X} {code} overlaps {prev[0]:04X}..{prev[1]:04X} {prev[2]}"
            )
        if merge and out and out[-1][2] == code and out[-1][1] + 1 == start:
            out[-1] = (out[-1][0], end, code)
        else:
            out.append((start, end, code))

    known = set(codes.values()) | SPECIAL_CODES
    for cp, code in overrides.items():
        if code not in known:
            raise TableBuildError(f"override U+{cp:04X} -> {code} is not a known code")
    return ScriptRangeTable(tuple(out), dict(overrides), unicode_version)


# -- serialized table -------------------------------------------------------
#
# Plain text, one record per line:
#
#   # scriptid-table 1
#   # unicode 15.0.0
#   # default Zzzz
#   @ FFFD Zzzz            override
#   0000 0040 Zyyy         inclusive range
#
# Fields are separated by single tabs in the written file; any whitespace is
# accepted when reading.


def dumps_table(table: ScriptRangeTable) -> str:
    lines = [
        f"# {TABLE_FORMAT} {TABLE_FORMAT_VERSION}",
        f"# unicode {table.unicode_version or 'unknown'}",
        f"# default {table.default_code}",
    ]
    for cp in sorted(table.overrides):
        lines.append(f"@\t{cp:04X}\t{table.overrides[cp]}")
    for start, end, code in table.entries:
        lines.append(f"{start:04X}\t{end:04X}\t{code}")
    return "\n".join(lines) + "\n"


def loads_table(text: str, source: str | None = None) -> ScriptRangeTable:
    version = None
    default = UNKNOWN
    overrides: dict[int, str] = {}
    entries = []
    seen_magic = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition(" ")
            if key == TABLE_FORMAT:
                if value.strip() != str(TABLE_FORMAT_VERSION):
                    raise UcdParseError(f"unsupported table format version {value!r}", lineno, source)
                seen_magic = True
            elif key == "unicode":
                version = None if value == "unknown" else value
            elif key == "default":
                default = value
            continue
        fields = line.split()
        if len(fields) != 3 or not is_script_code(fields[2]):
            raise UcdParseError("expected '<start> <end> <code>' or '@ <cp> <code>'", lineno, source)
        if fields[0] == "@":
            overrides[_parse_codepoint(fields[1], lineno, source)] = fields[2]
        else:
            start = _parse_codepoint(fields[0], lineno, source)
            end = _parse_codepoint(fields[1], lineno, source)
            entries.append((start, end, fields[2]))
    if not seen_magic:
        raise UcdParseError(f"missing '# {TABLE_FORMAT} {TABLE_FORMAT_VERSION}' header", None, source)
    table = ScriptRangeTable(tuple(entries), overrides, version, default)
    table.check()
    return table


def render_table_module(table: ScriptRangeTable) -> str:
    """Python source for the embedded table (see ``_table.py``)."""
    out = [
        "# Generated by `scriptid build-table --module`. Do not edit.",
        f"UNICODE_VERSION = {table.unicode_version!r}",
        f"DEFAULT_CODE = {table.default_code!r}",
        "OVERRIDES = {"
        + ", ".join(f"0x{cp:04X}: {c!r}" for cp, c in sorted(table.overrides.items()))
        + "}",
        "ENTRIES = (",
    ]
    out.extend(f"    (0x{s:04X}, 0x{e:04X}, {c!r})," for s, e, c in table.entries)
    out.append(")")
    return "\n".join(out) + "\n"


def read_bundled(name: str) -> str:
    return resources.files("scriptid").joinpath("data", name).read_text(encoding="utf-8")


def build_bundled_table(merge: bool = True) -> ScriptRangeTable:
    """Build the table from the UCD files shipped with the package."""
    entries = parse_scripts_file(read_bundled(SCRIPTS_FILE), SCRIPTS_FILE)
    aliases = parse_aliases_file(read_bundled(ALIASES_FILE), ALIASES_FILE)
    return build_table(entries, aliases, merge=merge, unicode_version=UNICODE_VERSION)


_default_table: ScriptRangeTable | None = None


def default_table() -> ScriptRangeTable:
    """The embedded Unicode 15.0 table. No file I/O."""
    global _default_table
    if _default_table is None:
        from . import _table

        _default_table = ScriptRangeTable(
            _table.ENTRIES, dict(_table.OVERRIDES), _table.UNICODE_VERSION, _table.DEFAULT_CODE
        )
    return _default_table


def code_order(table: ScriptRangeTable) -> Sequence[str]:
    """All codes of ``table`` in lexicographic order; indices used by dense views."""
    return tuple(sorted(table.codes()))
