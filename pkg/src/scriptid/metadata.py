"""Language -> writing system resource compiled from several source tables.

Four sources are consumed: LangTag and ScriptSource (both SIL), LREC_2800
and Wikipedia. The two SIL sources are first consolidated into one table;
each script of a language is then CORE when at least two of
{SIL, LREC_2800, Wikipedia} list it, or when only one of the three has
anything to say about the language at all. Scripts listed by a single
source otherwise land in that source's AUXILIARY bucket.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, TextIO

from .ucd import is_script_code

LANGTAG = "LangTag"
SCRIPTSOURCE = "ScriptSource"
LREC = "LREC_2800"
WIKIPEDIA = "Wikipedia"
SIL = "SIL"
SOURCE_IDS = (LANGTAG, SCRIPTSOURCE, LREC, WIKIPEDIA)

WIKI_AUX = "Wiki-aux"
LREC_AUX = "LREC2800-aux"
SIL_AUX = "SIL-aux"
SIL2_AUX = "SIL2-aux"
AUX_BUCKETS = (WIKI_AUX, LREC_AUX, SIL_AUX, SIL2_AUX)
_AUX_FOR = {SIL: SIL_AUX, LREC: LREC_AUX, WIKIPEDIA: WIKI_AUX}

RESOURCE_FORMAT = "scriptid-resource"
RESOURCE_FORMAT_VERSION = 1

_LANG_RE = re.compile(r"^[a-z]{3}$")


class SourceFormatError(ValueError):
    pass


def is_language_code(code: str) -> bool:
    return bool(_LANG_RE.match(code))


@dataclass(frozen=True)
class SourceTable:
    source_id: str
    entries: Mapping[str, frozenset[str]] = field(default_factory=dict)

    def get(self, lang: str) -> frozenset[str]:
        return self.entries.get(lang, frozenset())

    def __contains__(self, lang: str) -> bool:
        return lang in self.entries

    def languages(self) -> set[str]:
        return set(self.entries)


@dataclass(frozen=True)
class AgreementStats:
    common_languages: int
    complete: int
    partial: int
    none: int


@dataclass(frozen=True)
class WritingSystemRecord:
    language: str
    core: frozenset[str]
    aux: Mapping[str, frozenset[str]] = field(default_factory=dict)
    # script -> source ids that list it
    provenance: Mapping[str, frozenset[str]] = field(default_factory=dict)
    # set when exactly one of SIL / LREC_2800 / Wikipedia informs the language
    single_source: str | None = None

    def aux_scripts(self) -> frozenset[str]:
        return frozenset().union(*self.aux.values()) if self.aux else frozenset()


@dataclass(frozen=True)
class WritingSystemResource:
    records: Mapping[str, WritingSystemRecord]

    def __contains__(self, lang: str) -> bool:
        return lang in self.records

    def __len__(self) -> int:
        return len(self.records)


# -- source tables ----------------------------------------------------------


def parse_source_lines(lines: Iterable[str], source: str | None = None) -> dict[str, SourceTable]:
    """Read ``source_id<TAB>lang<TAB>Scr1,Scr2`` records, grouped by source id.

    Blank lines and ``#`` comments are skipped; repeated rows for the same
    source and language are unioned.
    """
    grouped: dict[str, dict[str, set[str]]] = defaultdict(lambda: defaultdict(set))
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        where = f"{source or '<input>'}:{lineno}"
        if len(fields) != 3:
            raise SourceFormatError(f"{where}: expected 3 tab-separated fields, got {len(fields)}")
        source_id, lang, scripts = (f.strip() for f in fields)
        if source_id not in SOURCE_IDS:
            raise SourceFormatError(f"{where}: unknown source id {source_id!r}")
        if not is_language_code(lang):
            raise SourceFormatError(f"{where}: {lang!r} is not a three-letter language code")
        codes = [c.strip() for c in scripts.split(",") if c.strip()]
        if not codes:
            raise SourceFormatError(f"{where}: no scripts listed for {lang}")
        for code in codes:
            if not is_script_code(code):
                raise SourceFormatError(f"{where}: {code!r} is not an ISO 15924 code")
        grouped[source_id][lang].update(codes)
    return {
        sid: SourceTable(sid, {lang: frozenset(s) for lang, s in langs.items()})
        for sid, langs in grouped.items()
    }


def read_source_files(paths: Iterable[str]) -> dict[str, SourceTable]:
    tables: dict[str, dict[str, frozenset[str]]] = defaultdict(dict)
    for path in paths:
        with open(path, encoding="utf-8") as f:
            for sid, table in parse_source_lines(f, path).items():
                merged = tables[sid]
                for lang, scripts in table.entries.items():
                    merged[lang] = merged.get(lang, frozenset()) | scripts
    return {sid: SourceTable(sid, entries) for sid, entries in tables.items()}


def format_source_table(table: SourceTable) -> str:
    return "".join(
        f"{table.source_id}\t{lang}\t{','.join(sorted(table.entries[lang]))}\n"
        for lang in sorted(table.entries)
    )


# -- agreement --------------------------------------------------------------


def jaccard(a: Iterable[str], b: Iterable[str]) -> Fraction:
    a, b = set(a), set(b)
    union = a | b
    if not union:
        raise ValueError("Jaccard similarity is undefined for two empty sets")
    return Fraction(len(a & b), len(union))


def agreement(a: SourceTable, b: SourceTable) -> AgreementStats:
    """Classify every language listed by both tables as CA, PA or NA."""
    common = a.languages() & b.languages()
    complete = partial = none = 0
    for lang in common:
        j = jaccard(a.get(lang), b.get(lang))
        if j == 1:
            complete += 1
        elif j == 0:
            none += 1
        else:
            partial += 1
    return AgreementStats(len(common), complete, partial, none)


# -- compilation ------------------------------------------------------------


def consolidate_sil(
    langtag: SourceTable, scriptsource: SourceTable, wikipedia: SourceTable, lrec: SourceTable
) -> tuple[SourceTable, dict[str, frozenset[str]]]:
    """Merge the two SIL sources into one ``SIL`` table.

    Scripts both list are kept. A script only one of them lists is kept if
    Wikipedia or LREC_2800 also lists it, otherwise it goes to the returned
    SIL2-aux map. A language known to only one SIL source passes through.
    """
    sil: dict[str, frozenset[str]] = {}
    sil2_aux: dict[str, frozenset[str]] = {}
    for lang in sorted(langtag.languages() | scriptsource.languages()):
        if lang not in langtag or lang not in scriptsource:
            sil[lang] = langtag.get(lang) | scriptsource.get(lang)
            continue
        a, b = langtag.get(lang), scriptsource.get(lang)
        attested = wikipedia.get(lang) | lrec.get(lang)
        disputed = a ^ b
        kept = (a & b) | (disputed & attested)
        if kept:
            sil[lang] = kept
        if disputed - attested:
            sil2_aux[lang] = disputed - attested
    return SourceTable(SIL, sil), sil2_aux


def compile_resource(
    sil: SourceTable,
    sil2_aux: Mapping[str, frozenset[str]],
    lrec: SourceTable,
    wikipedia: SourceTable,
) -> WritingSystemResource:
    sources = (sil, lrec, wikipedia)
    languages = set(sil2_aux).union(*(s.languages() for s in sources))
    records = {}
    for lang in sorted(languages):
        informing = [s for s in sources if lang in s]
        support: dict[str, set[str]] = defaultdict(set)
        for s in informing:
            for script in s.get(lang):
                support[script].add(s.source_id)

        aux: dict[str, set[str]] = defaultdict(set)
        if len(informing) == 1:
            core = set(support)
        else:
            core = {script for script, ids in support.items() if len(ids) >= 2}
            for script, ids in support.items():
                if len(ids) == 1:
                    aux[_AUX_FOR[next(iter(ids))]].add(script)

        extra = set(sil2_aux.get(lang, ())) - core
        if extra:
            aux[SIL2_AUX] |= extra
            for script in extra:
                support[script].add(SIL)

        records[lang] = WritingSystemRecord(
            language=lang,
            core=frozenset(core),
            aux={bucket: frozenset(s) for bucket, s in aux.items() if s},
            provenance={script: frozenset(ids) for script, ids in support.items()},
            single_source=informing[0].source_id if len(informing) == 1 else None,
        )
    return WritingSystemResource(records)


def merge_sources(tables: Mapping[str, SourceTable]) -> WritingSystemResource:
    """Consolidate and compile from a ``{source_id: table}`` map; absent sources count as empty."""

    def get(sid: str) -> SourceTable:
        return tables.get(sid) or SourceTable(sid, {})

    sil, sil2_aux = consolidate_sil(get(LANGTAG), get(SCRIPTSOURCE), get(WIKIPEDIA), get(LREC))
    return compile_resource(sil, sil2_aux, get(LREC), get(WIKIPEDIA))


def admissible_scripts(resource: WritingSystemResource, lang: str, include_aux: bool = False) -> frozenset[str]:
    record = resource.records.get(lang)
    if record is None:
        return frozenset()
    if include_aux:
        return record.core | record.aux_scripts()
    return record.core


# -- resource file ----------------------------------------------------------
#
# JSON object, keys sorted at every level:
#
#   {"format": "scriptid-resource", "version": 1,
#    "languages": {"fas": {"core": ["Arab"],
#                          "aux": {"LREC2800-aux": ["Latn"]},
#                          "provenance": {"Arab": ["LREC_2800", "SIL", "Wikipedia"],
#                                         "Latn": ["LREC_2800"]},
#                          "single_source": null}}}


def resource_to_dict(resource: WritingSystemResource) -> dict:
    languages = {}
    for lang, rec in resource.records.items():
        languages[lang] = {
            "core": sorted(rec.core),
            "aux": {b: sorted(s) for b, s in rec.aux.items()},
            "provenance": {script: sorted(ids) for script, ids in rec.provenance.items()},
            "single_source": rec.single_source,
        }
    return {"format": RESOURCE_FORMAT, "version": RESOURCE_FORMAT_VERSION, "languages": languages}


def resource_from_dict(data: Mapping) -> WritingSystemResource:
    if data.get("format") != RESOURCE_FORMAT or data.get("version") != RESOURCE_FORMAT_VERSION:
        raise SourceFormatError("not a version 1 scriptid resource")
    records = {}
    for lang, rec in data["languages"].items():
        bad = set(rec.get("aux", {})) - set(AUX_BUCKETS)
        if bad:
            raise SourceFormatError(f"{lang}: unknown aux bucket(s) {sorted(bad)}")
        records[lang] = WritingSystemRecord(
            language=lang,
            core=frozenset(rec["core"]),
            aux={b: frozenset(s) for b, s in rec.get("aux", {}).items()},
            provenance={k: frozenset(v) for k, v in rec.get("provenance", {}).items()},
            single_source=rec.get("single_source"),
        )
    return WritingSystemResource(records)


def dump_resource(resource: WritingSystemResource, fp: TextIO) -> None:
    json.dump(resource_to_dict(resource), fp, sort_keys=True, indent=1, ensure_ascii=False)
    fp.write("\n")


def load_resource(path: str) -> WritingSystemResource:
    with open(path, encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise SourceFormatError(f"{path}:{e.lineno}: {e.msg}") from None
    return resource_from_dict(data)
