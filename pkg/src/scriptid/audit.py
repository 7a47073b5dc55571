"""Corpus quality auditing with the script mismatch rule.

A sentence labelled with language ``l`` matches when its main script is one
of the admissible scripts for ``l``; if the label also names a script
(``bg-Latn``), only that script is admissible. Per label the pipeline is:
split rows on newlines, deduplicate, sample ``n`` sentences, identify, and
report accuracy over the whole sample and over its longest fractions.

Sampling contract: for every label key ``k`` a ``random.Random`` is seeded
with the first 8 bytes (big endian) of ``sha256(f"{seed}:{k}")``. The
label's deduplicated sentences are fed, in first-seen order, through a
size-``n`` reservoir (algorithm R: item ``i >= n`` draws
``j = rng.randrange(i + 1)`` and replaces slot ``j`` when ``j < n``). The
reservoir, in slot order, is the sample.

:func:`audit` streams its input: per label it keeps the reservoir and a
16-byte digest of every distinct sentence seen, never the whole corpus.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
import random
import re
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .identify import identify, identify_many
from .metadata import WritingSystemResource, admissible_scripts, is_language_code
from .ucd import ScriptRangeTable, is_script_code, read_bundled

log = logging.getLogger(__name__)

DEFAULT_LANG_MAP = "lang-map.tsv"
_LABEL_RE = re.compile(r"^([A-Za-z]{2,3})(?:[-_]([A-Za-z]{4}))?$")


class LabelError(ValueError):
    pass


class UnknownLanguageError(KeyError):
    """The label's language has no record in the resource."""


@dataclass(frozen=True)
class LabeledSentence:
    text: str
    lang: str
    script_hint: str | None = None

    @property
    def key(self) -> str:
        return f"{self.lang}-{self.script_hint}" if self.script_hint else self.lang


# -- labels -----------------------------------------------------------------


def parse_lang_map(text: str) -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2 or not is_language_code(fields[1]):
            raise LabelError(f"line {lineno}: expected '<label> <three-letter code>'")
        out[fields[0].lower()] = fields[1]
    return out


def load_lang_map(path: str | None = None) -> dict[str, str]:
    if path is None:
        return parse_lang_map(read_bundled(DEFAULT_LANG_MAP))
    with open(path, encoding="utf-8") as f:
        return parse_lang_map(f.read())


def parse_label(label: str, lang_map: Mapping[str, str]) -> tuple[str, str | None]:
    """``"bg-Latn"`` -> ``("bul", "Latn")``; ``"eng"`` -> ``("eng", None)``."""
    label = label.strip()
    if label.lower() in lang_map:
        return lang_map[label.lower()], None
    m = _LABEL_RE.match(label)
    if not m:
        raise LabelError(f"unparseable label {label!r}")
    lang, hint = m.group(1).lower(), m.group(2)
    lang = lang_map.get(lang, lang)
    if not is_language_code(lang):
        raise LabelError(f"no three-letter code for {label!r}")
    if hint is not None:
        hint = hint.title()
        if not is_script_code(hint):
            raise LabelError(f"bad script subtag in {label!r}")
    return lang, hint


# -- pipeline stages --------------------------------------------------------


def normalize_corpus(
    rows: Iterable[tuple[str, str]], lang_map: Mapping[str, str] | None = None
) -> tuple[list[LabeledSentence], int]:
    """Split ``(text, label)`` rows into sentences and deduplicate per label.

    Returns the sentences in first-seen order and the number of rows skipped
    for an unparseable label.
    """
    if lang_map is None:
        lang_map = load_lang_map()
    seen: dict[str, set[str]] = defaultdict(set)
    out = []
    skipped = 0
    for text, label in rows:
        try:
            lang, hint = parse_label(label, lang_map)
        except LabelError as e:
            skipped += 1
            log.warning("skipping row: %s", e)
            continue
        for sentence in text.split("\n"):
            if not sentence.strip():
                continue
            s = LabeledSentence(sentence, lang, hint)
            bucket = seen[s.key]
            if sentence in bucket:
                continue
            bucket.add(sentence)
            out.append(s)
    return out, skipped


def group_sentences(sentences: Iterable[LabeledSentence]) -> dict[str, list[LabeledSentence]]:
    groups: dict[str, list[LabeledSentence]] = defaultdict(list)
    for s in sentences:
        groups[s.key].append(s)
    return dict(groups)


def _rng(seed: int, key: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{key}".encode("utf-8")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


class Reservoir:
    """Uniform fixed-size sample of a stream, seeded per label key."""

    def __init__(self, n: int, seed: int, key: str):
        self.n = n
        self.seen = 0
        self.items: list = []
        self._rng = _rng(seed, key)

    def add(self, item) -> None:
        if self.seen < self.n:
            self.items.append(item)
        else:
            j = self._rng.randrange(self.seen + 1)
            if j < self.n:
                self.items[j] = item
        self.seen += 1

    @property
    def full(self) -> bool:
        return self.seen >= self.n


def _exclusion_reason(seen: int, n: int) -> str:
    return f"only {seen} sentences, need {n}"


def sample(groups: Mapping[str, Sequence], n: int, seed: int) -> tuple[dict[str, list], dict[str, str]]:
    """Draw ``n`` items per group without replacement.

    Groups with fewer than ``n`` items are returned in the second map with
    the reason they were excluded.
    """
    if n < 1:
        raise ValueError("sample size must be at least 1")
    chosen, excluded = {}, {}
    for key in sorted(groups):
        r = Reservoir(n, seed, key)
        for item in groups[key]:
            r.add(item)
        if r.full:
            chosen[key] = r.items
        else:
            excluded[key] = _exclusion_reason(r.seen, n)
    return chosen, excluded


def _stream_sample(
    rows: Iterable[tuple[str, str]], lang_map: Mapping[str, str], n: int, seed: int
) -> tuple[dict[str, list[LabeledSentence]], dict[str, str], int]:
    """normalize_corpus + group_sentences + sample in one pass, bounded memory."""
    if n < 1:
        raise ValueError("sample size must be at least 1")
    seen: dict[str, set[bytes]] = defaultdict(set)
    reservoirs: dict[str, Reservoir] = {}
    skipped = 0
    for text, label in rows:
        try:
            lang, hint = parse_label(label, lang_map)
        except LabelError as e:
            skipped += 1
            log.warning("skipping row: %s", e)
            continue
        for sentence in text.split("\n"):
            if not sentence.strip():
                continue
            s = LabeledSentence(sentence, lang, hint)
            digest = hashlib.blake2b(sentence.encode("utf-8", "surrogatepass"), digest_size=16).digest()
            bucket = seen[s.key]
            if digest in bucket:
                continue
            bucket.add(digest)
            if s.key not in reservoirs:
                reservoirs[s.key] = Reservoir(n, seed, s.key)
            reservoirs[s.key].add(s)
    chosen, excluded = {}, {}
    for key in sorted(reservoirs):
        r = reservoirs[key]
        if r.full:
            chosen[key] = r.items
        else:
            excluded[key] = _exclusion_reason(r.seen, n)
    return chosen, excluded, skipped


def match_sentence(
    sentence: LabeledSentence,
    resource: WritingSystemResource,
    include_aux: bool = False,
    table: ScriptRangeTable | None = None,
) -> tuple[str | None, bool]:
    main = identify(sentence.text, table).main_script
    return main, is_match(main, sentence, resource, include_aux)


def is_match(main: str | None, sentence: LabeledSentence, resource: WritingSystemResource, include_aux: bool) -> bool:
    if sentence.script_hint is not None:
        return main == sentence.script_hint
    if sentence.lang not in resource:
        raise UnknownLanguageError(sentence.lang)
    return main in admissible_scripts(resource, sentence.lang, include_aux)


# -- report -----------------------------------------------------------------


def _fraction_key(f: float) -> str:
    return f"acc{round(f * 100):d}"


@dataclass(frozen=True)
class LanguageAudit:
    key: str
    language: str
    script_hint: str | None
    sampled: int
    matches: int
    length_acc: Mapping[float, Fraction]
    script_tally: Mapping[str, int]
    admissible: frozenset[str]

    @property
    def acc(self) -> Fraction:
        return Fraction(self.matches, self.sampled)

    @property
    def acc70(self) -> Fraction | None:
        return self.length_acc.get(0.7)

    @property
    def acc50(self) -> Fraction | None:
        return self.length_acc.get(0.5)

    def to_dict(self) -> dict:
        d = {
            "language": self.language,
            "script_hint": self.script_hint,
            "sampled": self.sampled,
            "matches": self.matches,
            "acc": float(self.acc),
            "admissible": sorted(self.admissible),
            "script_tally": dict(sorted(self.script_tally.items())),
        }
        for f, value in sorted(self.length_acc.items(), reverse=True):
            d[_fraction_key(f)] = float(value)
        return d


@dataclass(frozen=True)
class AuditReport:
    languages: Mapping[str, LanguageAudit] = field(default_factory=dict)
    excluded: Mapping[str, str] = field(default_factory=dict)
    skipped_rows: int = 0
    options: Mapping[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "options": dict(self.options),
            "skipped_rows": self.skipped_rows,
            "excluded": dict(sorted(self.excluded.items())),
            "languages": {k: self.languages[k].to_dict() for k in sorted(self.languages)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

    def mean_acc(self) -> Fraction | None:
        if not self.languages:
            return None
        return sum((a.acc for a in self.languages.values()), Fraction(0)) / len(self.languages)


def length_filtered_accuracy(lengths: Sequence[int], matched: Sequence[bool], fraction: float) -> Fraction:
    """Accuracy over the ``ceil(fraction * n)`` longest items; ties keep input order."""
    n = len(lengths)
    k = math.ceil(Fraction(str(fraction)) * n)
    if k == 0:
        raise ValueError("length filter keeps no sentences")
    order = sorted(range(n), key=lambda i: -lengths[i])[:k]
    return Fraction(sum(1 for i in order if matched[i]), k)


def _audit_group(args) -> LanguageAudit:
    key, sentences, resource, include_aux, fractions, table = args
    results = identify_many([s.text for s in sentences], table)
    mains = results.main_scripts()
    matched = [is_match(m, s, resource, include_aux) for m, s in zip(mains, sentences)]
    lengths = [len(s.text) for s in sentences]
    first = sentences[0]
    if first.script_hint is not None:
        admissible = frozenset({first.script_hint})
    else:
        admissible = admissible_scripts(resource, first.lang, include_aux)
    return LanguageAudit(
        key=key,
        language=first.lang,
        script_hint=first.script_hint,
        sampled=len(sentences),
        matches=sum(matched),
        length_acc={f: length_filtered_accuracy(lengths, matched, f) for f in fractions},
        script_tally=dict(Counter("none" if m is None else m for m in mains)),
        admissible=admissible,
    )


def audit(
    rows: Iterable[tuple[str, str]],
    resource: WritingSystemResource,
    n: int = 1000,
    seed: int = 0,
    include_aux: bool = False,
    length_fractions: Sequence[float] = (0.7, 0.5),
    lang_map: Mapping[str, str] | None = None,
    table: ScriptRangeTable | None = None,
    workers: int = 1,
) -> AuditReport:
    """Run normalize -> sample -> match over ``(text, label)`` rows."""
    if lang_map is None:
        lang_map = load_lang_map()
    chosen, excluded, skipped = _stream_sample(rows, lang_map, n, seed)
    jobs = []
    for key, group in chosen.items():
        s = group[0]
        if s.script_hint is None and s.lang not in resource:
            excluded[key] = "language not in resource"
            continue
        jobs.append((key, group, resource, include_aux, tuple(length_fractions), table))

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            audits = list(pool.map(_audit_group, jobs))
    else:
        audits = [_audit_group(job) for job in jobs]

    options = {
        "sample": n,
        "seed": seed,
        "include_aux": include_aux,
        "length_filters": list(length_fractions),
    }
    return AuditReport({a.key: a for a in audits}, excluded, skipped, options)


# -- corpus input -----------------------------------------------------------

_ESCAPES = {"n": "\n", "t": "\t", "r": "\r", "\\": "\\"}
_ESCAPE_RE = re.compile(r"\\(.)")


def unescape(text: str) -> str:
    r"""Undo ``\n``, ``\t``, ``\r`` and ``\\`` escapes; other backslashes stay."""
    return _ESCAPE_RE.sub(lambda m: _ESCAPES.get(m.group(1), m.group(0)), text)


def parse_corpus_line(line: str, lineno: int = 0, fmt: str = "tsv") -> tuple[str, str]:
    """One input record -> ``(text, label)``.

    ``tsv``: ``label<TAB>text`` with backslash escapes in ``text``.
    ``jsonl``: ``{"label": ..., "text": ...}``.
    """
    line = line.rstrip("\r\n")
    if fmt == "jsonl":
        try:
            obj = json.loads(line)
            return obj["text"], obj["label"]
        except (ValueError, KeyError, TypeError) as e:
            raise ValueError(f"line {lineno}: bad record ({e})") from None
    label, sep, text = line.partition("\t")
    if not sep:
        raise ValueError(f"line {lineno}: expected '<label><TAB><text>'")
    return unescape(text), label
