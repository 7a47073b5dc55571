"""Per-character script classification and script distributions.

Every scalar value is looked up in a :class:`~scriptid.ucd.ScriptRangeTable`;
``Zinh`` codes then take the code of the nearest preceding non-``Zinh``
character before counting. The main script is the most frequent code, ties
going to the lexicographically smallest code.
"""

from __future__ import annotations

import weakref
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .ucd import INHERITED, MAX_CODEPOINT, ScriptRangeTable, default_table


@dataclass(frozen=True)
class ScriptDistribution:
    counts: Mapping[str, int] = field(default_factory=dict)
    total: int = 0

    def percentages(self) -> dict[str, Fraction]:
        if not self.total:
            return {}
        return {code: Fraction(n, self.total) for code, n in self.counts.items()}

    def __add__(self, other: "ScriptDistribution") -> "ScriptDistribution":
        merged = Counter(self.counts)
        merged.update(other.counts)
        return ScriptDistribution(dict(merged), self.total + other.total)


@dataclass(frozen=True)
class IdentificationResult:
    main_script: str | None
    distribution: ScriptDistribution

    @property
    def main_percentage(self) -> Fraction:
        if self.main_script is None:
            return Fraction(0)
        return Fraction(self.distribution.counts[self.main_script], self.distribution.total)

    def as_record(self, digits: int = 4) -> dict:
        """JSON-ready form with percentages rounded to ``digits`` places."""
        return {
            "main": self.main_script,
            "percentage": round(float(self.main_percentage), digits),
            "total": self.distribution.total,
            "distribution": dict(sorted(self.distribution.counts.items())),
        }


def _table(table: ScriptRangeTable | None) -> ScriptRangeTable:
    return default_table() if table is None else table


def classify_chars(text: str, table: ScriptRangeTable | None = None) -> list[str]:
    """One code per scalar value, before ``Zinh`` resolution."""
    lookup = _table(table).lookup
    return [lookup(ord(ch)) for ch in text]


def resolve_inherited(codes: Sequence[str]) -> list[str]:
    out = []
    prev = INHERITED
    for code in codes:
        if code == INHERITED:
            out.append(prev)
        else:
            out.append(code)
            prev = code
    return out


def main_script(counts: Mapping[str, int]) -> str | None:
    if not counts:
        return None
    return min(counts, key=lambda code: (-counts[code], code))


def tally(codes: Iterable[str]) -> IdentificationResult:
    counts = Counter(codes)
    return IdentificationResult(main_script(counts), ScriptDistribution(dict(counts), sum(counts.values())))


def identify(text: str, table: ScriptRangeTable | None = None) -> IdentificationResult:
    """Script distribution and main script of ``text``."""
    index = dense_index(_table(table))
    lut, inherited, names = index.lut_bytes, index.inherited, index.names
    counts: dict[int, int] = {}
    prev = inherited
    for ch in text:
        i = lut[ord(ch)]
        if i == inherited:
            i = prev
        else:
            prev = i
        counts[i] = counts.get(i, 0) + 1
    named = {names[i]: n for i, n in counts.items()}
    return IdentificationResult(main_script(named), ScriptDistribution(named, len(text)))


# -- dense index and batch identification -----------------------------------


class DenseIndex:
    """Array mapping every codepoint to a small integer code index.

    Code indices follow lexicographic code order, so ``argmax`` over a row of
    counts picks the smallest code among ties.
    """

    def __init__(self, table: ScriptRangeTable):
        self.names = tuple(sorted(table.codes()))
        if len(self.names) > 255:
            raise ValueError("dense index holds at most 255 distinct codes")
        pos = {code: i for i, code in enumerate(self.names)}
        lut = np.full(MAX_CODEPOINT + 1, pos[table.default_code], dtype=np.uint8)
        for start, end, code in table.entries:
            lut[start : end + 1] = pos[code]
        for cp, code in table.overrides.items():
            lut[cp] = pos[code]
        self.lut = lut
        self.lut_bytes = lut.tobytes()
        self.inherited = pos.get(INHERITED, -1)


_indexes: "weakref.WeakKeyDictionary[ScriptRangeTable, DenseIndex]" = weakref.WeakKeyDictionary()


def dense_index(table: ScriptRangeTable) -> DenseIndex:
    index = _indexes.get(table)
    if index is None:
        index = _indexes[table] = DenseIndex(table)
    return index


class IdentificationBatch(Sequence[IdentificationResult]):
    """Results of :func:`identify_many`, stored as sparse count rows.

    Counting and main-script selection are complete when the batch is
    built; ``batch[i]`` only wraps row ``i`` in an :class:`IdentificationResult`.
    """

    def __init__(self, names, mains, totals, indptr, cols, values):
        self.names = names
        self.mains = mains
        self.totals = totals
        self.indptr = indptr
        self.cols = cols
        self.values = values

    def __len__(self) -> int:
        return len(self.totals)

    def _result(self, i: int) -> IdentificationResult:
        total = int(self.totals[i])
        if not total:
            return IdentificationResult(None, ScriptDistribution({}, 0))
        lo, hi = self.indptr[i], self.indptr[i + 1]
        names = self.names
        counts = {names[c]: v for c, v in zip(self.cols[lo:hi].tolist(), self.values[lo:hi].tolist())}
        return IdentificationResult(names[self.mains[i]], ScriptDistribution(counts, total))

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self._result(j) for j in range(*i.indices(len(self)))]
        if i < 0:
            i += len(self)
        if not 0 <= i < len(self):
            raise IndexError(i)
        return self._result(i)

    def main_scripts(self) -> list[str | None]:
        names = self.names
        return [names[m] if t else None for m, t in zip(self.mains.tolist(), self.totals.tolist())]

    def distribution(self) -> ScriptDistribution:
        """Summed distribution over the whole batch."""
        sums = np.bincount(self.cols, weights=self.values, minlength=len(self.names))
        counts = {self.names[c]: int(v) for c, v in enumerate(sums.tolist()) if v}
        return ScriptDistribution(counts, int(self.totals.sum()))


def _identify_chunk(texts: Sequence[str], index: DenseIndex):
    n = len(texts)
    lengths = np.fromiter((len(t) for t in texts), dtype=np.int64, count=n)
    joined = "".join(texts)
    cps = np.frombuffer(joined.encode("utf-32-le", "surrogatepass"), dtype=np.uint32)
    codes = index.lut[cps]

    starts = np.zeros(n, dtype=np.int64)
    np.cumsum(lengths[:-1], out=starts[1:])
    if index.inherited >= 0 and len(codes):
        # Forward-fill the last non-Zinh position, never crossing a text start.
        anchor = codes != index.inherited
        anchor[starts[lengths > 0]] = True
        pos = np.where(anchor, np.arange(len(codes)), 0)
        np.maximum.accumulate(pos, out=pos)
        codes = codes[pos]

    k = len(index.names)
    owner = np.repeat(np.arange(n, dtype=np.int64), lengths)
    matrix = np.bincount(owner * k + codes, minlength=n * k).reshape(n, k)
    rows, cols = np.nonzero(matrix)
    values = matrix[rows, cols].astype(np.int64)
    row_nnz = np.bincount(rows, minlength=n)
    return matrix.argmax(axis=1).astype(np.uint8), lengths, row_nnz, cols.astype(np.uint8), values


def identify_many(
    texts: Iterable[str], table: ScriptRangeTable | None = None, chunk_size: int = 8192
) -> IdentificationBatch:
    """Vectorised :func:`identify` over many texts; results keep input order."""
    index = dense_index(_table(table))
    parts = []
    batch: list[str] = []
    for text in texts:
        batch.append(text)
        if len(batch) >= chunk_size:
            parts.append(_identify_chunk(batch, index))
            batch = []
    if batch or not parts:
        parts.append(_identify_chunk(batch, index))
    mains, totals, nnz, cols, values = (np.concatenate(p) for p in zip(*parts))
    indptr = np.zeros(len(totals) + 1, dtype=np.int64)
    np.cumsum(nnz, out=indptr[1:])
    return IdentificationBatch(index.names, mains, totals, indptr, cols, values)
