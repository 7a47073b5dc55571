"""Command-line interface: ``scriptid <command> ...``.

Data goes to stdout as one JSON record per line (``--pretty`` prints a
table instead); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import logging
import os
import re
import sys
from itertools import islice
from typing import BinaryIO, Iterable, Iterator, Sequence, TextIO

from . import __version__
from .audit import audit, load_lang_map, parse_corpus_line
from .identify import identify, identify_many
from .metadata import (
    SOURCE_IDS,
    SourceFormatError,
    agreement,
    dump_resource,
    load_resource,
    merge_sources,
    read_source_files,
)
from .records import write_record
from .ucd import (
    ALIASES_FILE,
    SCRIPTS_FILE,
    UNICODE_VERSION,
    ScriptRangeTable,
    UcdParseError,
    build_table,
    default_table,
    dumps_table,
    loads_table,
    parse_aliases_file,
    parse_scripts_file,
    read_bundled,
    render_table_module,
)
from .vocab import (
    DEFAULT_MARKERS,
    cost_ratio,
    parse_docs_line,
    parse_vocab,
    tokenization_stats,
    vocab_script_distribution,
)

log = logging.getLogger("scriptid")

PER_LINE_CHUNK = 4096


class CliError(Exception):
    pass


# -- input helpers ----------------------------------------------------------


def _open_binary(path: str | None) -> BinaryIO:
    if path is None or path == "-":
        return sys.stdin.buffer
    return open(path, "rb")


def _decode(raw: bytes, policy: str, where: str) -> str:
    try:
        return raw.decode("utf-8", errors="strict" if policy == "fail" else "replace")
    except UnicodeDecodeError as e:
        raise CliError(f"{where}: invalid UTF-8 at byte {e.start}") from None


def iter_lines(path: str | None, policy: str) -> Iterator[tuple[int, str]]:
    """``(lineno, line)`` without the line terminator, read lazily."""
    name = path or "<stdin>"
    f = _open_binary(path)
    try:
        for lineno, raw in enumerate(f, 1):
            if raw.endswith(b"\n"):
                raw = raw[:-1]
                if raw.endswith(b"\r"):
                    raw = raw[:-1]
            yield lineno, _decode(raw, policy, f"{name}:{lineno}")
    finally:
        if f is not sys.stdin.buffer:
            f.close()


def _located(path: str, err: Exception) -> CliError:
    """``line 3: msg`` from a record parser -> ``path:3: msg``."""
    msg = re.sub(r"^line (\d+): ", r"\1: ", str(err))
    return CliError(f"{path}:{msg}")


def _read_text(path: str, policy: str = "fail") -> str:
    with open(path, "rb") as f:
        return _decode(f.read(), policy, path)


def _load_table(path: str | None) -> ScriptRangeTable:
    if path is None:
        return default_table()
    return loads_table(_read_text(path), path)


def _pct(value, digits: int = 4) -> str:
    return f"{float(value):.{digits}f}"


def _print_table(rows: Sequence[Sequence[object]], header: Sequence[str], out: TextIO) -> None:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for n, r in enumerate(cells):
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
        if n == 0:
            out.write("  ".join("-" * w for w in widths) + "\n")


# -- commands ---------------------------------------------------------------

_VERSION_IN_NAME = re.compile(r"Scripts-(\d+\.\d+\.\d+)\.txt")


def cmd_build_table(args, out: TextIO) -> None:
    if args.scripts:
        scripts_text, scripts_name = _read_text(args.scripts), args.scripts
    else:
        scripts_text, scripts_name = read_bundled(SCRIPTS_FILE), SCRIPTS_FILE
    if args.aliases:
        aliases_text, aliases_name = _read_text(args.aliases), args.aliases
    else:
        aliases_text, aliases_name = read_bundled(ALIASES_FILE), ALIASES_FILE
    version = args.unicode_version
    if version is None:
        m = _VERSION_IN_NAME.search(scripts_text[:200]) or _VERSION_IN_NAME.search(scripts_name)
        version = m.group(1) if m else None

    entries = parse_scripts_file(scripts_text, scripts_name)
    aliases = parse_aliases_file(aliases_text, aliases_name)
    table = build_table(entries, aliases, merge=not args.no_merge, unicode_version=version)
    text = render_table_module(table) if args.module else dumps_table(table)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        out.write(text)
    log.info("%d ranges, %d scripts", len(table.entries), len(table.scripts()))


def cmd_identify(args, out: TextIO) -> None:
    table = _load_table(args.table)
    paths = args.inputs or [None]
    if not args.per_line:
        for path in paths:
            f = _open_binary(path)
            try:
                text = _decode(f.read(), args.on_bad_utf8, path or "<stdin>")
            finally:
                if f is not sys.stdin.buffer:
                    f.close()
            _emit_results([identify(text, table)], args.pretty, out)
        return
    for path in paths:
        lines = (line for _, line in iter_lines(path, args.on_bad_utf8))
        while True:
            chunk = list(islice(lines, PER_LINE_CHUNK))
            if not chunk:
                break
            _emit_results(identify_many(chunk, table), args.pretty, out)


def _emit_results(results: Iterable, pretty: bool, out: TextIO) -> None:
    for r in results:
        if pretty:
            dist = ", ".join(f"{c}:{n}" for c, n in sorted(r.distribution.counts.items(), key=lambda kv: (-kv[1], kv[0])))
            out.write(f"{r.main_script or '-'}\t{_pct(r.main_percentage)}\t{dist}\n")
        else:
            write_record(r.as_record(), out)


def cmd_merge_metadata(args, out: TextIO) -> None:
    tables = read_source_files(args.sources)
    missing = [sid for sid in SOURCE_IDS if sid not in tables]
    if missing:
        log.warning("no rows for source(s): %s", ", ".join(missing))
    resource = merge_sources(tables)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            dump_resource(resource, f)
    else:
        dump_resource(resource, out)
    log.info("%d languages", len(resource))


def cmd_agreement(args, out: TextIO) -> None:
    picked = []
    for path, wanted in ((args.first, args.first_source), (args.second, args.second_source)):
        tables = read_source_files([path])
        if wanted is None:
            if len(tables) != 1:
                raise CliError(f"{path}: holds {len(tables)} sources; choose one with --sources")
            wanted = next(iter(tables))
        if wanted not in tables:
            raise CliError(f"{path}: no rows for source {wanted}")
        picked.append(tables[wanted])
    a, b = picked
    stats = agreement(a, b)
    record = {
        "pair": [a.source_id, b.source_id],
        "common": stats.common_languages,
        "complete": stats.complete,
        "partial": stats.partial,
        "none": stats.none,
    }
    if args.pretty:
        _print_table(
            [[f"({a.source_id}, {b.source_id})", stats.common_languages, stats.complete, stats.partial, stats.none]],
            ["Pair", "|L|", "CA", "PA", "NA"],
            out,
        )
    else:
        write_record(record, out)


def _parse_fractions(text: str) -> list[float]:
    try:
        values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"bad --length-filters value {text!r}") from None
    if any(not 0 < v <= 1 for v in values):
        raise CliError("length filters must lie in (0, 1]")
    return values


def cmd_audit(args, out: TextIO) -> None:
    resource = load_resource(args.resource)
    lang_map = load_lang_map(args.lang_map)
    fmt = args.format or ("jsonl" if args.corpus.endswith(".jsonl") else "tsv")
    fractions = _parse_fractions(args.length_filters)
    name = args.corpus

    def rows():
        for lineno, line in iter_lines(args.corpus, args.on_bad_utf8):
            if not line.strip():
                continue
            try:
                yield parse_corpus_line(line, lineno, fmt)
            except ValueError as e:
                raise _located(name, e) from None

    report = audit(
        rows(),
        resource,
        n=args.sample,
        seed=args.seed,
        include_aux=args.include_aux,
        length_fractions=fractions,
        lang_map=lang_map,
        table=_load_table(args.table),
        workers=args.workers,
    )
    if args.pretty:
        _print_audit(report, fractions, out)
        return
    data = report.to_dict()
    for key, rec in data["languages"].items():
        write_record({"type": "language", "key": key, **rec}, out)
    for key, reason in data["excluded"].items():
        write_record({"type": "excluded", "key": key, "reason": reason}, out)
    mean = report.mean_acc()
    write_record(
        {
            "type": "summary",
            "languages": len(report.languages),
            "excluded": len(report.excluded),
            "skipped_rows": report.skipped_rows,
            "mean_acc": None if mean is None else float(mean),
            "options": data["options"],
        },
        out,
    )


def _print_audit(report, fractions, out: TextIO) -> None:
    rows = []
    for key in sorted(report.languages):
        a = report.languages[key]
        tally = sorted(a.script_tally.items(), key=lambda kv: (-kv[1], kv[0]))
        scripts = ", ".join(f"{'*' if code in a.admissible else ''}{code}:{n}" for code, n in tally)
        rows.append([key, scripts, _pct(a.acc, 3)] + [_pct(a.length_acc[f], 3) for f in fractions])
    header = ["Language", "Scripts (* admissible)", "ACC"] + [f"ACC{round(f * 100)}" for f in fractions]
    _print_table(rows, header, out)
    for key, reason in sorted(report.excluded.items()):
        out.write(f"excluded {key}: {reason}\n")


def cmd_vocab_scripts(args, out: TextIO) -> None:
    text = _read_text(args.vocab, args.on_bad_utf8)
    vocab = parse_vocab(text, json_format=args.json or args.vocab.endswith(".json"))
    markers = DEFAULT_MARKERS if args.strip_markers is None else tuple(args.strip_markers)
    profile = vocab_script_distribution(vocab, _load_table(args.table), markers)
    if args.pretty:
        _print_table(
            [[c, n, _pct(p * 100, 2)] for c, n, p in profile.rows()], ["Script", "Tokens", "%"], out
        )
        out.write(f"vocabulary size {profile.size}, scripts present {profile.scripts_present}\n")
        return
    for code, n, share in profile.rows():
        write_record({"type": "script", "script": code, "tokens": n, "share": float(share)}, out)
    write_record({"type": "summary", "size": profile.size, "scripts_present": profile.scripts_present}, out)


def cmd_tok_stats(args, out: TextIO) -> None:
    docs = []
    for lineno, line in iter_lines(args.docs, args.on_bad_utf8):
        if not line.strip():
            continue
        try:
            docs.append(parse_docs_line(line, lineno))
        except ValueError as e:
            raise _located(args.docs, e) from None
    stats = tokenization_stats(docs, args.unk)
    reference = None
    if args.reference:
        matches = [s for s in stats if s.doc_id == args.reference]
        if not matches:
            raise CliError(f"reference document {args.reference!r} not found")
        reference = matches[0]
    rows = []
    for s in stats:
        record = {
            "doc_id": s.doc_id,
            "tokens": s.token_count,
            "unk": s.unk_count,
            "unk_fraction": float(s.unk_fraction),
            "excluded": s.excluded,
        }
        if reference is not None:
            record["cost_ratio"] = cost_ratio(reference, s)
        if args.pretty:
            rows.append(list(record.values()))
        else:
            write_record(record, out)
    if args.pretty:
        header = ["doc_id", "tokens", "unk", "unk_fraction", "excluded"]
        if reference is not None:
            header.append("cost_ratio")
        _print_table(rows, header, out)


# -- parser -----------------------------------------------------------------


def _version_string() -> str:
    table = default_table()
    return f"scriptid {__version__} (Unicode {UNICODE_VERSION}, table sha256:{table.checksum()[:16]})"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scriptid", description="ISO 15924 script identification toolkit.")
    p.add_argument("--version", action="version", version=_version_string())
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, table=True, pretty=True, decode=True):
        if table:
            sp.add_argument("--table", help="serialized table (default: embedded Unicode 15.0 table)")
        if pretty:
            sp.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON lines")
        if decode:
            sp.add_argument("--on-bad-utf8", choices=("replace", "fail"), default="replace")

    sp = sub.add_parser("build-table", help="compile Scripts.txt + PropertyValueAliases.txt")
    sp.add_argument("--scripts", help="Scripts.txt (default: bundled 15.0.0)")
    sp.add_argument("--aliases", help="PropertyValueAliases.txt (default: bundled 15.0.0)")
    sp.add_argument("-o", "--output")
    sp.add_argument("--module", action="store_true", help="emit the embedded Python table module")
    sp.add_argument("--no-merge", action="store_true", help="keep adjacent same-script ranges apart")
    sp.add_argument("--unicode-version")
    sp.set_defaults(func=cmd_build_table)

    sp = sub.add_parser("identify", help="script distribution of text")
    sp.add_argument("inputs", nargs="*", help="input files (default: stdin)")
    sp.add_argument("--per-line", action="store_true", help="one record per input line")
    common(sp)
    sp.set_defaults(func=cmd_identify)

    sp = sub.add_parser("merge-metadata", help="compile source tables into a resource file")
    sp.add_argument("sources", nargs="+", help="source table files (source_id, lang, scripts)")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_merge_metadata)

    sp = sub.add_parser("agreement", help="Jaccard agreement between two source tables")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--sources", nargs=2, metavar=("FIRST_ID", "SECOND_ID"))
    common(sp, table=False, decode=False)
    sp.set_defaults(func=cmd_agreement)

    sp = sub.add_parser("audit", help="script mismatch audit of a labelled corpus")
    sp.add_argument("--corpus", required=True)
    sp.add_argument("--resource", required=True)
    sp.add_argument("--sample", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--include-aux", action="store_true")
    sp.add_argument("--length-filters", default="0.7,0.5")
    sp.add_argument("--lang-map", help="label -> ISO 639 map (default: bundled)")
    sp.add_argument("--format", choices=("tsv", "jsonl"))
    sp.add_argument("--workers", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("vocab-scripts", help="script profile of a token vocabulary")
    sp.add_argument("--vocab", required=True)
    sp.add_argument("--json", action="store_true", help="vocabulary is JSON (list or token->id)")
    sp.add_argument("--strip-markers", nargs="*", help=f"leading markers to strip (default: {' '.join(DEFAULT_MARKERS)})")
    common(sp)
    sp.set_defaults(func=cmd_vocab_scripts)

    sp = sub.add_parser("tok-stats", help="token and UNK counts of tokenized documents")
    sp.add_argument("--docs", required=True)
    sp.add_argument("--unk", help="UNK token")
    sp.add_argument("--reference", help="doc_id to compute cost ratios against")
    common(sp, table=False)
    sp.set_defaults(func=cmd_tok_stats)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="scriptid: %(message)s")
    if getattr(args, "sources", None) and args.command == "agreement":
        args.first_source, args.second_source = args.sources
    elif args.command == "agreement":
        args.first_source = args.second_source = None
    out = out or sys.stdout
    try:
        args.func(args, out)
    except BrokenPipeError:
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 1
    except (CliError, UcdParseError, SourceFormatError, ValueError, KeyError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"scriptid: error: {msg}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
