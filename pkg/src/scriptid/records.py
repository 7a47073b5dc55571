"""Line-delimited JSON records, the output format of every CLI command.

Each record is one JSON object on one line, keys sorted, non-ASCII kept
as-is. :func:`read_records` parses exactly what :func:`format_record`
writes.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, TextIO


def format_record(record: dict) -> str:
    return json.dumps(record, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def write_record(record: dict, out: TextIO) -> None:
    out.write(format_record(record))
    out.write("\n")


def read_records(lines: Iterable[str]) -> Iterator[dict]:
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise ValueError(f"line {lineno}: {e.msg}") from None
        if not isinstance(obj, dict):
            raise ValueError(f"line {lineno}: record is not an object")
        yield obj
